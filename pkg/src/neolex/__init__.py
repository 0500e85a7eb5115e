"""neolex: semi-automatic neologism mining for Russian social-media corpora."""

from importlib import resources
from pathlib import Path

__version__ = "0.1.0"


def data_path(*parts: str) -> Path:
    """Path to a shipped data file (inventories, stoplists, gold lexicon)."""
    root = resources.files(__name__) / "data"
    return Path(str(root.joinpath(*parts)))
