import pathlib
import sys

from hypothesis import HealthCheck, settings

# allow running the tests from a source checkout without installing
_src = pathlib.Path(__file__).resolve().parent.parent / "src"
if _src.exists() and str(_src) not in sys.path:
    sys.path.insert(0, str(_src))

settings.register_profile(
    "polylog",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("polylog")
