"""On-disk cache of reduced Groebner bases.

One file per ideal, named by the SHA-256 of the order name and the canonical
generator text. A cached basis is only trusted after it passes the same
audit used by the verify harness; otherwise it is recomputed and rewritten.
"""

from __future__ import annotations

import hashlib
import logging
import os
import tempfile
from pathlib import Path

from .grobner import Ideal, audit_groebner
from .polynomials import Ring, parse_poly, to_text

log = logging.getLogger(__name__)

ENV_VAR = "DSK_CACHE_DIR"


def vars_label(ring: Ring) -> str:
    xs = [v for v in ring.names if v.startswith("x")]
    us = [v for v in ring.names if v.startswith("u")]
    if list(ring.names) == xs + us and xs == [f"x{i}" for i in range(1, len(xs) + 1)] \
            and us == [f"u{j}" for j in range(1, len(us) + 1)]:
        parts = [f"{b[0]}..{b[-1]}" for b in (xs, us) if b]
        return ",".join(parts)
    return ",".join(ring.names)


def cache_key(ideal: Ideal) -> str:
    text = ideal.order.name + "\n" + ",".join(ideal.ring.names) + "\n"
    text += "\n".join(to_text(g, ideal.order) for g in ideal.generators)
    return hashlib.sha256(text.encode()).hexdigest()


class GroebnerCache:
    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)
        self.hits = 0
        self.misses = 0

    @classmethod
    def from_env(cls, override: str | None = None) -> "GroebnerCache | None":
        path = override or os.environ.get(ENV_VAR)
        return cls(path) if path else None

    def path_for(self, ideal: Ideal) -> Path:
        return self.directory / f"{cache_key(ideal)}.gb"

    def header(self, ideal: Ideal, params: str, task: str) -> str:
        return f"# order={ideal.order.name} vars={vars_label(ideal.ring)} params={params} task={task}"

    def load(self, ideal: Ideal) -> tuple[str, list] | None:
        path = self.path_for(ideal)
        try:
            lines = path.read_text().splitlines()
        except FileNotFoundError:
            return None
        if not lines or not lines[0].startswith("# "):
            return None
        fields = dict(f.split("=", 1) for f in lines[0][2:].split() if "=" in f)
        if fields.get("order") != ideal.order.name or fields.get("vars") != vars_label(ideal.ring):
            return None
        try:
            gb = [parse_poly(line, ideal.ring) for line in lines[1:] if line.strip()]
        except (ValueError, KeyError):
            return None
        return lines[0], gb

    def groebner(self, ideal: Ideal, params: str = "-", task: str = "-") -> tuple:
        """Reduced GB of ``ideal``, from disk when a valid entry exists."""
        loaded = self.load(ideal)
        if loaded is not None:
            _, gb = loaded
            if audit_groebner(gb, ideal.order, ideal.generators) is None:
                self.hits += 1
                ideal.__dict__["groebner"] = tuple(gb)
                return tuple(gb)
            log.warning("cached basis at %s failed its audit; recomputing", self.path_for(ideal))
        self.misses += 1
        gb = ideal.groebner
        self.store(ideal, params, task)
        return gb

    def store(self, ideal: Ideal, params: str = "-", task: str = "-") -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path_for(ideal)
        body = self.header(ideal, params, task) + "\n"
        body += "".join(to_text(g, ideal.order) + "\n" for g in ideal.groebner)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".gb")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(body)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path
