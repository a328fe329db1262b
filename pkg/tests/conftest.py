from hypothesis import settings

# Exact ring arithmetic is slow on the first call of each cached product
settings.register_profile("exact", deadline=None, max_examples=25)
settings.load_profile("exact")
