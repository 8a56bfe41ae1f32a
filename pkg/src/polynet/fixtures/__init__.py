"""Bundled worked examples as JSON documents.

``load(name)`` parses one fixture; ``names()`` lists them. Networks and
scripts for the two constructed networks (``fig6``, ``fig8``) are
transcribed by hand, independently of :func:`polynet.constructor.construct`.
"""

from __future__ import annotations

from importlib import resources
from typing import Any


def names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))


def text(name: str) -> str:
    path = resources.files(__name__) / f"{name}.json"
    if not path.is_file():
        raise KeyError(f"no fixture named {name!r}; available: {', '.join(names())}")
    return path.read_text()


def load(name: str) -> Any:
    from ..formats import parse

    return parse(text(name))


__all__ = ["load", "names", "text"]
