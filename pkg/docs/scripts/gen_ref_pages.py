# Copyright 2026 The semidom Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Writes one mkdocstrings page per public `semidom` module.

Subpackages get an `index.md` rendering their package docstring. Private
modules (`_cli`, `_internal`) are left out. With `--check`, nothing is
written and the script fails if a page is missing, stale or left over.
"""

import argparse
import shutil
import sys
from pathlib import Path

ROOT = Path(__file__).parent.parent.parent
PACKAGE = ROOT / "semidom"
API_ROOT = ROOT / "docs" / "api"

INDEX_NOTE = """!!! note

    The API reference is generated from the docstrings.

"""


def _pages() -> dict[Path, str]:
    pages: dict[Path, str] = {API_ROOT / "index.md": f"{INDEX_NOTE}:::semidom\n"}
    for path in sorted(PACKAGE.rglob("*.py")):
        parts = path.relative_to(PACKAGE).with_suffix("").parts
        if parts[-1] == "__init__":
            parts = parts[:-1]
            if not parts:
                continue
            page = API_ROOT.joinpath(*parts, "index.md")
        else:
            page = API_ROOT.joinpath(*parts).with_suffix(".md")

        if any(part.startswith("_") for part in parts):
            continue

        dotted = ".".join(("semidom", *parts))
        pages[page] = f"# `{dotted}`\n\n:::{dotted}\n"
    return pages


def main(args: argparse.Namespace) -> None:
    pages = _pages()

    if args.check:
        stale = [p for p, body in pages.items() if not p.is_file() or p.read_text() != body]
        leftover = set(API_ROOT.rglob("*.md")) - pages.keys()
        for page in stale:
            print(f"missing or stale: {page.relative_to(ROOT)}", file=sys.stderr)
        for page in sorted(leftover):
            print(f"leftover: {page.relative_to(ROOT)}", file=sys.stderr)
        sys.exit(1 if stale or leftover else 0)

    if API_ROOT.exists():
        if not args.overwrite:
            print(f"{API_ROOT.relative_to(ROOT)} already exists, pass --overwrite to regenerate")
            sys.exit(0)
        shutil.rmtree(API_ROOT)

    for page, body in pages.items():
        page.parent.mkdir(parents=True, exist_ok=True)
        page.write_text(body)
    print(f"wrote {len(pages)} pages under {API_ROOT.relative_to(ROOT)}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Generate the API reference pages.")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--overwrite", action="store_true")
    mode.add_argument("--check", action="store_true")
    main(parser.parse_args())
