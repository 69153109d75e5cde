from hypothesis import settings

# Exact polynomial arithmetic has occasional slow examples; judge the
# suite by wall time, not per-example deadlines.
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")
