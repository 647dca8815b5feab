import hashlib


def derive_seed(master: int, *parts) -> int:
    """Stable 63-bit seed from the master seed and a run identity."""
    key = ":".join([str(int(master))] + [_part(p) for p in parts])
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") & ((1 << 63) - 1)


def _part(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(getattr(value, "value", value))
