from importlib.metadata import PackageNotFoundError, version

__all__ = [
	"core",
	"render",
	"cli",
]

try:
	__version__ = version("ArdhaJya")
except PackageNotFoundError:
	__version__ = "0.0.0"

# Friendly re-exports for the common entry points
from .core.grid import AngleGrid, RecursionConfig  # noqa: E402,F401
from .core.table import SineTable, generate_recursion_table  # noqa: E402,F401
