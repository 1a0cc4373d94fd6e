"""Pydantic plumbing shared by the result records: the base model and the ordinal JSON encoding."""

from typing import Annotated, Any, Dict

from pydantic import BaseModel, ConfigDict, PlainSerializer

from ..ordinals import EpsAtom, Ordinal, terms


def ordinal_to_json(a: Ordinal) -> Dict[str, Any]:
    """{"text", "terms": [{"exponent", "coefficient"}]}; atoms are {"text", "atom": k}."""
    if isinstance(a, EpsAtom):
        return {"text": str(a), "atom": a.k}
    return {
        "text": str(a),
        "terms": [{"exponent": ordinal_to_json(e), "coefficient": c} for e, c in terms(a)],
    }


OrdinalField = Annotated[Ordinal, PlainSerializer(ordinal_to_json, return_type=dict)]


class Record(BaseModel):
    """Immutable result record; ordinal and space fields hold engine values."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
