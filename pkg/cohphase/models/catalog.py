"""Identifiers of the built-in state families."""

from enum import Enum


class CatalogId(str, Enum):
    """Stable catalog ids used by the CLI and config files."""
    HARMONIC = "harmonic"
    PENSON_SOLOMON = "penson-solomon"
    BARUT_GIRARDELLO = "barut-girardello"
    GILMORE_PERELOMOV = "gilmore-perelomov"
    HYDROGEN_LIKE = "hydrogen"
    POSCHL_TELLER = "poschl-teller"
    INFINITE_WELL = "infinite-well"
    ISOTONIC = "isotonic"
