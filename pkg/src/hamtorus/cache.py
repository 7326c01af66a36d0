"""On-disk cache of boundary matrices in the triplet text format.

File names are content hashes of (format version, model, weight, degree),
so a cache directory can be shared between models; writes go through a
temporary file and an atomic rename.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path

from .basis import BasisKind
from .linalg import SparseRationalMatrix

FORMAT_VERSION = "1"
ENV_VAR = "HAMTORUS_CACHE"
DEFAULT_DIR = ".hamtorus-cache"


def default_cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR, DEFAULT_DIR))


class MatrixCache:
    def __init__(self, root: Path | str):
        self.root = Path(root)  # created lazily on the first store

    def _path(self, *, n: int, kind: BasisKind, rank2m: int, w: int, m: int) -> Path:
        key = "|".join(
            [FORMAT_VERSION, kind.value, str(n), str(rank2m), str(w), str(m)]
        )
        digest = hashlib.sha256(key.encode()).hexdigest()[:24]
        return self.root / f"{digest}.mtx"

    def load(self, **key) -> SparseRationalMatrix | None:
        path = self._path(**key)
        try:
            text = path.read_text()
        except FileNotFoundError:
            return None
        return SparseRationalMatrix.from_text(text)

    def store(self, matrix: SparseRationalMatrix, **key) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        path = self._path(**key)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(matrix.to_text())
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
