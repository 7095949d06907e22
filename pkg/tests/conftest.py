from hypothesis import HealthCheck, settings

# kernel warm-up can make the first example slow; wall-clock deadlines off
settings.register_profile("permcodes", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("permcodes")
