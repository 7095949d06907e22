"""Staircase-word encodings of permutations and their composition structure.

The package provides: core permutation/word types and group operations
(perm_core), eight word-or-rank encodings with exact inverses (bijections),
composition analysis with fixed points, cycle spectra and claim verifiers
(analysis), random word processes validated against the Ewens sampling
formula (stochastic), and a command-line driver (cli).
"""

from ._backend import BACKEND
from .bijections import (
    EncodingId,
    decode,
    encode,
    encode_oneline,
    f1,
    f1_inv,
    f2,
    f2_inv,
    f3,
    f3_inv,
    f4,
    f4_inv,
    g1,
    g1_inv,
    g2,
    g2_inv,
    h1,
    h1_inv,
    h2,
    h2_inv,
)
from .analysis import (
    CompositionSpec,
    CycleSpectrum,
    VerificationReport,
    apply,
    cycle_spectrum,
    fixed_points,
    h_fixed_count,
    spectrum_from_text,
    spectrum_to_text,
)
from .errors import CapacityError
from .perm_core import (
    CycleForm,
    CycleType,
    Permutation,
    Word,
    complement,
    compose,
    cycle_type,
    from_cycle_form,
    identity,
    inverse,
    involution_count,
    is_involution,
    iter_words,
    order_reversal,
    rank_lex,
    rank_revlex,
    reverse,
    to_cycle_form,
    unrank_lex,
    unrank_revlex,
    validate_word,
)
from .stochastic import (
    EwensParams,
    Process,
    SampleReport,
    crp_word,
    ewens_pmf,
    feller_word,
    simulate,
)

__version__ = "0.1.0"
