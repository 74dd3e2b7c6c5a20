"""Shared test configuration: deterministic hypothesis runs."""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "exhaustive",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exhaustive")
