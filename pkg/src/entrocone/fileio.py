"""Reading the JSON and text formats shared by the command line and the library."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from .cones import Functional, PolyCone
from .entropy import DensityMatrix, EntropyVector, JointDistribution, PureState


class InputError(ValueError):
    """Malformed or inconsistent input file."""


def read_bytes(path: str | Path) -> bytes:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: cannot read file ({exc.strerror})") from None
    if not data.strip():
        raise InputError(f"{path}: file is empty")
    return data


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def parse_json(data: bytes, source: str = "<input>"):
    """Decode JSON, reporting failures with a byte offset."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{source}: invalid UTF-8 at byte offset {exc.start}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise InputError(f"{source}: malformed JSON at byte offset {offset}: {exc.msg}") from None


def load_json(path: str | Path):
    data = read_bytes(path)
    return parse_json(data, str(path)), data


def state_from_json(obj) -> JointDistribution | DensityMatrix | PureState:
    """Dispatch on the keys present.

    ``probs`` means a joint distribution, ``re``/``im`` a density matrix and
    ``amplitudes`` (with ``re`` and optional ``im`` lists) a pure state.
    """
    if not isinstance(obj, dict):
        raise InputError("state file must hold a JSON object")
    try:
        if "probs" in obj:
            return JointDistribution.from_json_obj(obj)
        if "amplitudes" in obj:
            amp = obj["amplitudes"]
            re = np.asarray(amp["re"], dtype=float)
            im = np.asarray(amp.get("im", np.zeros_like(re)), dtype=float)
            return PureState(tuple(obj["dims"]), re + 1j * im)
        if "re" in obj:
            return DensityMatrix.from_json_obj(obj)
    except (KeyError, TypeError) as exc:
        raise InputError(f"state file is missing or mistypes a field: {exc}") from None
    raise InputError("state file needs 'probs', 'amplitudes' or 're'")


def state_to_json(state) -> dict:
    if isinstance(state, PureState):
        return {
            "dims": list(state.local_dims),
            "amplitudes": {"re": state.amplitudes.real.tolist(), "im": state.amplitudes.imag.tolist()},
        }
    return state.to_json_obj()


def vector_from_json(obj) -> EntropyVector:
    try:
        return EntropyVector.from_json_obj(obj)
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"entropy vector file is missing or mistypes a field: {exc}") from None


def cone_from_json(obj) -> PolyCone:
    try:
        return PolyCone.from_json_obj(obj)
    except (KeyError, TypeError) as exc:
        raise InputError(f"cone file is missing or mistypes a field: {exc}") from None


def functional_from_json(obj) -> Functional:
    try:
        return Functional.from_json_obj(obj)
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"functional file is missing or mistypes a field: {exc}") from None


def dumps(obj) -> str:
    """Deterministic JSON text (two-space indent, trailing newline)."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
