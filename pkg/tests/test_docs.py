"""The python blocks in README.md and docs/ must run."""

import importlib.util
from pathlib import Path

import pytest

ROOT = Path(__file__).parents[1]


def _load_checker():
    spec = importlib.util.spec_from_file_location("check_docs", ROOT / "scripts" / "check_docs.py")
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


@pytest.mark.integration
def test_docs_code_blocks_run():
    checker = _load_checker()
    files = checker.doc_files(ROOT / "docs")
    assert ROOT / "README.md" in files
    failures = [f for path in files for f in checker.check_file(path)]
    assert failures == []


def test_block_extraction():
    checker = _load_checker()
    text = "intro\n```python\nx = 1\n```\n```bash\nls\n```\n```python\ny = 2\n```\n"
    assert list(checker.iter_python_blocks(text)) == ["x = 1", "y = 2"]
