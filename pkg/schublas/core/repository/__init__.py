from schublas.core.repository.memo_cache import MemoCache

__all__ = ["MemoCache"]
