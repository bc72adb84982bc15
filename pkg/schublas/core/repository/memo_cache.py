from __future__ import annotations

import logging
import threading
from typing import Generic, Hashable, Optional, TypeVar

from cachetools import LRUCache

from schublas.core.config.engine_config import current_config

logger = logging.getLogger(__name__)

V = TypeVar("V")


class MemoCache(Generic[V]):
    """정규화된 인덱스 키 → 계산 결과 LRU 캐시. 스레드 안전."""

    def __init__(self, name: str, maxsize: Optional[int] = None) -> None:
        """
        @param name 로그용 캐시 이름.
        @param maxsize 최대 항목 수. 없으면 처음 쓰일 때 활성 설정의 cache_entries.
        @returns None
        """
        self.name = name
        self._maxsize = maxsize
        self._store: Optional[LRUCache] = None
        self._lock = threading.RLock()
        self.hits = 0
        self.misses = 0

    def _cache(self) -> LRUCache:
        if self._store is None:
            self._store = LRUCache(maxsize=self._maxsize or current_config().cache_entries)
        return self._store

    @property
    def maxsize(self) -> int:
        with self._lock:
            return int(self._cache().maxsize)

    def get(self, key: Hashable) -> Optional[V]:
        """
        @param key 캐시 키.
        @returns 캐시된 값 또는 None.
        """
        with self._lock:
            value = self._cache().get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, key: Hashable, value: V) -> V:
        with self._lock:
            self._cache()[key] = value
        logger.debug("%s cache store %r", self.name, key)
        return value

    def reset(self, maxsize: Optional[int] = None) -> None:
        """
        항목과 통계를 비운다. 다음 사용 때 용량을 다시 정한다.

        @param maxsize 새 최대 항목 수. 없으면 활성 설정을 따른다.
        @returns None
        """
        with self._lock:
            self._maxsize = maxsize
            self._store = None
            self.hits = 0
            self.misses = 0

    def size(self) -> int:
        """
        @returns 저장된 항목 개수.
        """
        with self._lock:
            return len(self._cache())
