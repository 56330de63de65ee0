from __future__ import annotations

import argparse
import re
import sys
from collections.abc import Iterator
from pathlib import Path

ROOT = Path(__file__).parents[1]
CODE_BLOCK_RE = re.compile(r"```python\n(.*?)\n```", re.DOTALL)


def iter_python_blocks(md_text: str) -> Iterator[str]:
    for m in CODE_BLOCK_RE.finditer(md_text):
        yield m.group(1)


def check_file(path: Path) -> list[str]:
    """Execute every python block of a markdown file; return one message per failing block."""
    errors: list[str] = []
    text = path.read_text(encoding="utf-8")
    for i, block in enumerate(iter_python_blocks(text), start=1):
        # Isolated namespace per block
        ns: dict[str, object] = {"__name__": f"docs_block_{i}"}
        try:
            exec(compile(block, f"{path.name}#{i}", "exec"), ns, ns)
        except Exception as e:
            errors.append(f"{path.name} block#{i}: {type(e).__name__}: {e}")
    return errors


def doc_files(docs_dir: Path, include_readme: bool = True) -> list[Path]:
    files = sorted(docs_dir.glob("*.md"))
    if include_readme and (ROOT / "README.md").exists():
        files.insert(0, ROOT / "README.md")
    return files


def main() -> None:
    parser = argparse.ArgumentParser(description="Run the python code blocks in the docs")
    parser.add_argument("--docs-dir", default=str(ROOT / "docs"))
    parser.add_argument("--no-readme", action="store_true", help="Skip the top-level README.md")
    args = parser.parse_args()
    src = str(ROOT / "src")
    if src not in sys.path:
        sys.path.insert(0, src)
    failures: list[str] = []
    for p in doc_files(Path(args.docs_dir), include_readme=not args.no_readme):
        failures.extend(check_file(p))
    if failures:
        print("Docs code blocks failed:")
        for f in failures:
            print(" -", f)
        raise SystemExit(1)
    print("All docs code blocks executed successfully.")


if __name__ == "__main__":
    main()
