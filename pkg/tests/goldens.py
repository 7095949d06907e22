"""Hand-checked n=3 values shared by the bijection tests and the acceptance suite."""

# word -> (f2, f1) one-line images
TABLE_F = {
    (1, 1, 1): ((1, 2, 3), (1, 2, 3)),
    (1, 1, 2): ((2, 1, 3), (1, 3, 2)),
    (1, 1, 3): ((3, 1, 2), (3, 1, 2)),
    (1, 2, 1): ((1, 3, 2), (2, 1, 3)),
    (1, 2, 2): ((2, 3, 1), (2, 3, 1)),
    (1, 2, 3): ((3, 2, 1), (3, 2, 1)),
}

# word -> (g2, g1) one-line images
TABLE_G = {
    (1, 1, 1): ((3, 2, 1), (3, 2, 1)),
    (1, 1, 2): ((3, 1, 2), (2, 3, 1)),
    (1, 1, 3): ((2, 1, 3), (2, 1, 3)),
    (1, 2, 1): ((2, 3, 1), (3, 1, 2)),
    (1, 2, 2): ((1, 3, 2), (1, 3, 2)),
    (1, 2, 3): ((1, 2, 3), (1, 2, 3)),
}

# word -> f3 cycles
TREE_F3 = {
    (1, 1, 1): ((1,), (2,), (3,)),
    (1, 1, 2): ((1, 2), (3,)),
    (1, 1, 3): ((1, 3), (2,)),
    (1, 2, 1): ((1,), (2, 3)),
    (1, 2, 2): ((1, 2, 3),),
    (1, 2, 3): ((1, 3, 2),),
}

# word -> f4 cycles
TREE_F4 = {
    (1, 1, 1): ((1,), (2,), (3,)),
    (1, 1, 2): ((1, 3), (2,)),
    (1, 1, 3): ((1,), (2, 3)),
    (1, 2, 1): ((1, 2), (3,)),
    (1, 2, 2): ((1, 3, 2),),
    (1, 2, 3): ((1, 2, 3),),
}

# leaf order of the two branching trees at n=3: h1 follows word-lex order,
# h2 follows right-to-left word-lex order
H1_LEAVES = [(3, 2, 1), (2, 3, 1), (2, 1, 3), (3, 1, 2), (1, 3, 2), (1, 2, 3)]
H2_LEAVES = [(3, 2, 1), (2, 3, 1), (3, 1, 2), (1, 3, 2), (2, 1, 3), (1, 2, 3)]
