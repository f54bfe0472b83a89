"""JSON description files for cell complexes.

Format (version 1):

    {
      "format": "inducedym.complex/1",
      "name": "torus2x2",
      "sites": 4,
      "links": [[start, end], ...],
      "plaquettes": [[[link, sign], ...], ...],
      "areas": [1.0, ...] | null
    }
"""

import json
from pathlib import Path

from ..config import Config
from ..errors import InvalidInput
from .complex import CellComplex, Contour

FORMAT_TAG = "inducedym.complex/1"


def complex_to_dict(complex_: CellComplex) -> dict:
    """Convert to dictionary for JSON serialization."""
    return {
        "format": FORMAT_TAG,
        "name": complex_.name,
        "sites": complex_.n_sites,
        "links": [list(link) for link in complex_.links],
        "plaquettes": [[list(step) for step in walk] for walk in complex_.plaquettes],
        "areas": complex_.areas,
    }


def complex_from_dict(data: dict) -> CellComplex:
    fmt = data.get("format", FORMAT_TAG)
    if fmt != FORMAT_TAG:
        raise InvalidInput(f"unsupported complex format '{fmt}'", module="cellcomplex")
    try:
        return CellComplex(
            n_sites=int(data["sites"]),
            links=[tuple(link) for link in data["links"]],
            plaquettes=[tuple(tuple(step) for step in walk) for walk in data["plaquettes"]],
            areas=data.get("areas"),
            name=data.get("name", ""),
        )
    except InvalidInput:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidInput(f"malformed complex description: {e}", module="cellcomplex") from e


def resolve_complex_path(path: str | Path) -> Path:
    """Resolve a complex file, falling back to the bundled data/complexes directory."""
    candidate = Path(path)
    if candidate.exists():
        return candidate
    bundled = Config.COMPLEX_DIR / candidate.name
    if bundled.exists():
        return bundled
    raise InvalidInput(f"complex file not found: {path}", module="cellcomplex")


def load_complex(path: str | Path) -> CellComplex:
    resolved = resolve_complex_path(path)
    with open(resolved, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidInput(f"{resolved.name} is not valid JSON: {e.msg}", module="cellcomplex") from e
    if not isinstance(data, dict):
        raise InvalidInput(f"{resolved.name} does not hold a complex description", module="cellcomplex")
    return complex_from_dict(data)


def save_complex(complex_: CellComplex, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(complex_to_dict(complex_), f, indent=2)
        f.write("\n")
    return path


def parse_contour(spec: str, complex_: CellComplex) -> Contour:
    """
    Contour from a file or an inline description.

    Accepted forms: ``plaquette:P`` (the boundary of plaquette P),
    ``steps:L:S,L:S,...`` (signed links), or a JSON file holding
    ``{"steps": [[link, sign], ...]}``.
    """
    text = spec.strip()
    kind, _, body = text.partition(":")
    if kind in ("plaquette", "steps"):
        try:
            if kind == "plaquette":
                p = int(body)
            else:
                steps = [tuple(int(x) for x in item.split(":")) for item in body.split(",") if item]
        except ValueError as e:
            raise InvalidInput(f"cannot parse contour '{spec}'", module="cellcomplex") from e
        if kind == "steps":
            return Contour.from_steps(complex_, steps)
        if not 0 <= p < complex_.n_plaquettes:
            raise InvalidInput(f"no plaquette {p}", module="cellcomplex")
        return Contour.plaquette_boundary(complex_, p)
    path = Path(text)
    if not path.exists():
        raise InvalidInput(f"contour file not found: {spec}", module="cellcomplex")
    with open(path, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidInput(f"{path.name} is not valid JSON: {e.msg}", module="cellcomplex") from e
    if not isinstance(data, dict) or not isinstance(data.get("steps", []), list):
        raise InvalidInput(f"{path.name} does not hold a contour description", module="cellcomplex")
    return Contour.from_steps(complex_, data.get("steps", []))
