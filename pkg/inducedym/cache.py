"""Simple in-memory memo cache for representation data and series values.

Weight tables and Fourier coefficients are pure functions of their keys,
so entries never expire; they are only cleared explicitly (e.g. when the
working precision changes between test cases).
"""

import threading
from typing import Any, Callable


class MemoCache:
    """Thread-safe in-memory memo store.

    Usage:
        cache = MemoCache("weights")

        key = ("fourier", m, couplings.key(), precision)
        value = cache.get_or_compute(key, lambda: expensive_series(m))
    """

    def __init__(self, name: str, max_entries: int | None = None):
        self.name = name
        self.max_entries = max_entries
        self._store: dict[Any, Any] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: Any) -> Any | None:
        """Get a cached value if present."""
        with self._lock:
            if key in self._store:
                self.hits += 1
                return self._store[key]
            self.misses += 1
            return None

    def set(self, key: Any, value: Any) -> None:
        """Store a value, evicting the oldest entry when full."""
        with self._lock:
            if self.max_entries is not None and len(self._store) >= self.max_entries:
                oldest = next(iter(self._store))
                del self._store[oldest]
            self._store[key] = value

    def get_or_compute(self, key: Any, compute: Callable[[], Any]) -> Any:
        """Return the cached value for key, computing and storing it on a miss.

        The computation runs outside the lock; two threads racing on the
        same key both compute and the later write wins, which is harmless
        for pure values.
        """
        cached = self.get(key)
        if cached is not None:
            return cached
        value = compute()
        self.set(key, value)
        return value

    def clear(self, prefix: str | None = None) -> int:
        """Clear all entries, or only tuple keys whose first element matches prefix.

        Returns the number of entries cleared.
        """
        with self._lock:
            if prefix is None:
                count = len(self._store)
                self._store.clear()
                return count

            keys = [
                k for k in self._store
                if isinstance(k, tuple) and k and k[0] == prefix
            ]
            for k in keys:
                del self._store[k]
            return len(keys)

    def __len__(self) -> int:
        return len(self._store)


# Singleton instances shared across modules.
representation_cache = MemoCache("representations")
coefficient_cache = MemoCache("coefficients", max_entries=200_000)
