#!/usr/bin/env python3
"""Regenerate the shipped corpus of arrangement files in corpus/.

Deterministic: fixture definitions and seeds are fixed, so reruns are
byte-identical.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from pencilfiber.fixtures import build_corpus  # noqa: E402


def main() -> None:
    root = pathlib.Path(__file__).resolve().parent.parent
    out = root / "corpus"
    out.mkdir(exist_ok=True)
    for name, arr in sorted(build_corpus().items()):
        path = out / f"{name}.json"
        path.write_text(json.dumps(arr.to_json(), indent=2, sort_keys=True) + "\n")
        print(f"wrote {path.relative_to(root)} (r={arr.r})")


if __name__ == "__main__":
    main()
