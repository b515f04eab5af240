"""Bit-vector helpers.

Bit vectors are plain strings over '0'/'1', most significant bit first.
Node identifiers 1..n are encoded as id-1 in exactly ceil(log2 n) bits.
"""

from cliquelab.errors import CertificateFormatError


def word_size(n: int) -> int:
    """Per-link message capacity in bits: ceil(log2 n) for n >= 2."""
    if n < 2:
        raise ValueError(f"word size undefined for n={n}")
    return (n - 1).bit_length()


def to_bits(value: int, width: int) -> str:
    if value < 0 or value >= (1 << width):
        raise ValueError(f"value {value} does not fit in {width} bits")
    return format(value, "b").zfill(width) if width > 0 else ""


def from_bits(bits: str) -> int:
    return int(bits, 2) if bits else 0


def encode_id(node: int, n: int) -> str:
    return to_bits(node - 1, word_size(n))


def decode_id(bits: str) -> int:
    return from_bits(bits) + 1


def check_bits(bits: str) -> None:
    if not isinstance(bits, str) or bits.strip("01") != "":
        if bits == "":
            return
        raise ValueError(f"not a bit string: {bits!r}")


def pad_marked(bits: str, width: int) -> str:
    """Pad to exactly width+1 bits with a self-delimiting '1' marker."""
    if len(bits) > width:
        raise ValueError(f"cannot pad {len(bits)} bits into {width}")
    return bits + "1" + "0" * (width - len(bits))


def strip_marked(padded: str) -> str:
    """Inverse of pad_marked."""
    idx = padded.rindex("1")
    return padded[:idx]


def chunk(bits: str, width: int) -> list[str]:
    """Split into width-sized pieces; the last piece may be shorter."""
    return [bits[i : i + width] for i in range(0, len(bits), width)] if bits else []


def to_hexbits(bits: str) -> str:
    """Serialize a bit vector as '<bitlen>:<hex value>' (big-endian)."""
    check_bits(bits)
    return f"{len(bits)}:{format(from_bits(bits), 'x')}"


def from_hexbits(text: str) -> str:
    """Parse the '<bitlen>:<hex value>' form back into a bit string."""
    try:
        length_part, value_part = text.split(":", 1)
        length = int(length_part)
        value = int(value_part, 16)
    except ValueError as exc:
        raise CertificateFormatError(f"bad hexbits field {text!r}") from exc
    if length < 0 or value < 0 or value >= (1 << length):
        raise CertificateFormatError(f"hexbits value out of range: {text!r}")
    return to_bits(value, length)
