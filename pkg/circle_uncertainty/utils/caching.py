"""Caching utilities"""
from functools import lru_cache


class CalculationCache:
    """Cache manager for pure scalar kernels"""
    _cache_size = 128
    _registered = []
    
    @classmethod
    def cached(cls, maxsize: int = None):
        """Cache decorator that remembers the wrapped function for clear_all"""
        cache_size = maxsize if maxsize is not None else cls._cache_size
        
        def decorator(func):
            wrapped = lru_cache(maxsize=cache_size)(func)
            cls._registered.append(wrapped)
            return wrapped
        
        return decorator
    
    @classmethod
    def clear_all(cls):
        """Clear all registered caches"""
        for wrapped in cls._registered:
            wrapped.cache_clear()


def clear_caches():
    """Clear all calculation caches"""
    CalculationCache.clear_all()
