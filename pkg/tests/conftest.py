from hypothesis import settings

settings.register_profile("exact", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("exact")
