from hypothesis import settings

# trace reduction and Groebner runs populate caches on first use; wall-time
# deadlines only add flakiness here
settings.register_profile("charvar", deadline=None)
settings.load_profile("charvar")
