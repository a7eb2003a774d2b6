"""Built-in sequences and custom-file resolution."""
from pathlib import Path
from typing import Callable, Dict, List

from errors import UnknownSequenceError

from .spec import SequenceSpec
from .euler import euler_maclaurin_tail, euler_spec
from .wallis import wallis_spec
from .napier import napier_spec
from .beta_integral import beta_integral_spec
from .custom import custom_spec, load_custom_spec, parse_custom_spec

BUILTINS: Dict[str, Callable[[], SequenceSpec]] = {
    "beta_integral": beta_integral_spec,
    "euler": euler_spec,
    "napier": napier_spec,
    "wallis": wallis_spec,
}


def get_spec(name: str) -> SequenceSpec:
    """Return a fresh built-in spec by name."""
    try:
        return BUILTINS[name]()
    except KeyError:
        known = ", ".join(sorted(BUILTINS))
        raise UnknownSequenceError(f"unknown sequence {name!r} (built-ins: {known})") from None


def list_specs() -> List[SequenceSpec]:
    """Built-ins sorted by name."""
    return [BUILTINS[name]() for name in sorted(BUILTINS)]


def resolve(sequence: str) -> SequenceSpec:
    """A built-in name, or a path to a custom-sequence file."""
    if sequence in BUILTINS:
        return get_spec(sequence)
    path = Path(sequence)
    if path.is_file():
        return load_custom_spec(path)
    return get_spec(sequence)


__all__ = [
    "BUILTINS", "SequenceSpec", "get_spec", "list_specs", "resolve",
    "euler_spec", "wallis_spec", "napier_spec", "beta_integral_spec",
    "euler_maclaurin_tail", "custom_spec", "load_custom_spec", "parse_custom_spec",
]
