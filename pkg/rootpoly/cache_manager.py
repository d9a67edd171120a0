"""Pickle cache for Ehrhart-oracle h*-polynomials."""
import hashlib
import json
import logging
import pickle
from datetime import datetime
from pathlib import Path
from typing import Callable, Optional

from .digraph import Digraph, reduce
from .models import HStarPolynomial


def oracle_key(digraph: Digraph) -> str:
    """SHA-1 of the reduced digraph's JSON with edges renumbered 0..m-1.

    The oracle depends only on the set of incidence vectors, so edge ids are dropped.
    """
    reduced = reduce(digraph)
    canonical = {
        "vertices": reduced.vertex_count,
        "edges": sorted([e.tail, e.head] for e in reduced.edges),
    }
    payload = json.dumps(canonical, sort_keys=True, separators=(",", ":"))
    return "oracle-" + hashlib.sha1(payload.encode("utf-8")).hexdigest()


class CacheManager:
    """Stores oracle results as pickle files, one per reduced digraph."""

    def __init__(self, cache_dir: Path, use_cache: bool = False):
        """
        Args:
            cache_dir: Directory to store cache files
            use_cache: If True, read cached results when present.
                      Results are ALWAYS written, regardless of this flag
        """
        self.cache_dir = Path(cache_dir)
        self.use_cache = use_cache
        self.logger = logging.getLogger(__name__)
        self.hits = 0
        self.misses = 0

        self.cache_dir.mkdir(parents=True, exist_ok=True)

        if use_cache:
            self.logger.info("🔵 Cache mode: READ oracle results from cache when available")
        else:
            self.logger.info("🟢 Cache mode: ALWAYS recompute oracle results (but will cache them)")
        self.logger.info(f"📁 Cache directory: {cache_dir}")

    def _get_cache_file(self, cache_key: str) -> Path:
        return self.cache_dir / f"{cache_key}.pickle"

    def get(self, cache_key: str) -> Optional[HStarPolynomial]:
        if not self.use_cache:
            return None

        cache_file = self._get_cache_file(cache_key)
        if not cache_file.exists():
            self.logger.debug(f"📭 Cache miss: {cache_key}")
            return None

        try:
            with open(cache_file, "rb") as f:
                data = pickle.load(f)
        except Exception as e:
            self.logger.error(f"❌ Error reading cache file {cache_key}: {e}")
            return None
        if not isinstance(data, HStarPolynomial):
            self.logger.error(f"❌ Cache file {cache_key} holds {type(data).__name__}, ignoring it")
            return None

        mtime = datetime.fromtimestamp(cache_file.stat().st_mtime)
        self.logger.debug(f"✅ Cache hit: {cache_key} (cached on {mtime.strftime('%Y-%m-%d %H:%M:%S')})")
        return data

    def set(self, cache_key: str, data: HStarPolynomial) -> None:
        cache_file = self._get_cache_file(cache_key)
        try:
            with open(cache_file, "wb") as f:
                pickle.dump(data, f)
            self.logger.debug(f"💾 Cached: {cache_key}")
        except Exception as e:
            self.logger.error(f"❌ Error writing cache file {cache_key}: {e}")

    def oracle(self, digraph: Digraph, compute: Callable[[Digraph], HStarPolynomial]) -> HStarPolynomial:
        """Cached ``compute(digraph)``."""
        key = oracle_key(digraph)
        cached = self.get(key)
        if cached is not None:
            self.hits += 1
            return cached
        self.misses += 1
        result = compute(digraph)
        self.set(key, result)
        return result

    def entry_count(self) -> int:
        return sum(1 for _ in self.cache_dir.glob("*.pickle"))
