# qdfao/utils/str_utils.py
from re import compile

_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"
REGEX_DIGIT_STR = compile(r"^[0-9]*$")


def enforce_length(here: str, length=12) -> str:
    return here.ljust(length, " ") if len(here) < length else here[0:length]


def digits_to_str(digits) -> str:
    """
    Writes a most-significant-first digit list as a plain string, one character per digit.
    Digit values above 9 are written in brackets, e.g. [12].
    """
    return "".join(str(d) if d <= 9 else f"[{d}]" for d in digits)


def str_to_digits(text: str) -> list[int]:
    """Reads back what digits_to_str writes."""
    digits: list[int] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        ch = text[pos]
        if ch.isdigit():
            digits.append(int(ch))
            pos += 1
        elif ch == "[":
            end = text.find("]", pos)
            if end < 0 or not text[pos + 1 : end].isdigit():
                raise ValueError(f"unterminated digit group at position {pos} in '{text}'")
            digits.append(int(text[pos + 1 : end]))
            pos = end + 1
        else:
            raise ValueError(f"unexpected character '{ch}' at position {pos} in '{text}'")
    return digits


def int_to_base(n: int, base: int) -> str:
    """Positional writing of a non-negative integer; bases above 36 use dot-separated decimal digits."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return "0"
    out = []
    while n:
        n, r = divmod(n, base)
        out.append(r)
    out.reverse()
    if base <= len(_DIGIT_CHARS):
        return "".join(_DIGIT_CHARS[d] for d in out)
    return ".".join(str(d) for d in out)


def digit_char(d: int, base: int) -> str:
    if base <= len(_DIGIT_CHARS):
        return _DIGIT_CHARS[d]
    return f"[{d}]"
