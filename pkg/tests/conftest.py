from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

small_int = st.integers(min_value=-20, max_value=20)
nonzero_int = small_int.filter(lambda v: v != 0)
rationals = st.builds(Fraction, small_int, st.integers(min_value=1, max_value=9))
pos_rationals = st.builds(Fraction, st.integers(min_value=1, max_value=30),
                          st.integers(min_value=1, max_value=9))


def coeff_lists(min_size=2, max_size=7, elements=rationals):
    return st.lists(elements, min_size=min_size, max_size=max_size).filter(
        lambda c: c[-1] != 0)
