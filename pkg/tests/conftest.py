from hypothesis import settings

# exact rational arithmetic has heavy-tailed run times; only example counts matter here
settings.register_profile("exact", deadline=None, derandomize=True)
settings.load_profile("exact")
