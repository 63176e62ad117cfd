"""Process-wide tunables: universe cap and fusion cap."""
import contextlib
import contextvars

DEFAULT_MAX_UNIVERSE = 1 << 24
DEFAULT_MAX_FUSION = 8

_max_universe = contextvars.ContextVar("max_universe", default=DEFAULT_MAX_UNIVERSE)
_max_fusion = contextvars.ContextVar("max_fusion", default=DEFAULT_MAX_FUSION)


def max_universe() -> int:
    return _max_universe.get()


def max_fusion() -> int:
    return _max_fusion.get()


@contextlib.contextmanager
def limits(*, universe=None, fusion=None):
    """Temporarily override the caps in the current context."""
    tokens = []
    if universe is not None:
        if universe < 1:
            raise ValueError("universe cap must be positive")
        tokens.append((_max_universe, _max_universe.set(universe)))
    if fusion is not None:
        if fusion < 1:
            raise ValueError("fusion cap must be positive")
        tokens.append((_max_fusion, _max_fusion.set(fusion)))
    try:
        yield
    finally:
        for var, tok in reversed(tokens):
            var.reset(tok)
