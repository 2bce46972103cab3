import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "superchar",
    deadline=None,
    max_examples=int(os.environ.get("SUPERCHAR_EXAMPLES", 60)),
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("superchar")
