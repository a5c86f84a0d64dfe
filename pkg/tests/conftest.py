from hypothesis import settings

settings.register_profile("det", derandomize=True, max_examples=50)
settings.load_profile("det")
