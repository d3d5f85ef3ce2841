"""Figure-reproduction presets."""

from enum import Enum

from cohphase.models.catalog import CatalogId


class PresetCommand(str, Enum):
    """Sub-command a preset is meant for."""
    DIST = "dist"
    SQUEEZE = "squeeze"


# Odd figures are phase distributions, even figures squeezing sweeps.
FIGURE_PRESETS = {
    "fig1": {
        "description": "Penson-Solomon phase distribution, q = 0.5",
        "command": PresetCommand.DIST,
        "system": {"id": CatalogId.PENSON_SOLOMON, "params": {"q": 0.5}},
        "z_sweep": {"lo": 0.5, "hi": 2.0, "count": 4},
    },
    "fig2": {
        "description": "Penson-Solomon squeezing parameters, q = 0.5",
        "command": PresetCommand.SQUEEZE,
        "system": {"id": CatalogId.PENSON_SOLOMON, "params": {"q": 0.5}},
        "z_sweep": {"lo": 0.05, "hi": 4.0, "count": 80},
    },
    "fig3": {
        "description": "Barut-Girardello phase distribution, kappa = 3",
        "command": PresetCommand.DIST,
        "system": {"id": CatalogId.BARUT_GIRARDELLO, "params": {"kappa": 3.0}},
        "z_sweep": {"lo": 0.5, "hi": 2.0, "count": 4},
    },
    "fig4": {
        "description": "Barut-Girardello squeezing parameters, kappa = 3",
        "command": PresetCommand.SQUEEZE,
        "system": {"id": CatalogId.BARUT_GIRARDELLO, "params": {"kappa": 3.0}},
        "z_sweep": {"lo": 0.05, "hi": 4.0, "count": 80},
    },
    "fig5": {
        "description": "Gilmore-Perelomov phase distribution, kappa = 3",
        "command": PresetCommand.DIST,
        "system": {"id": CatalogId.GILMORE_PERELOMOV, "params": {"kappa": 3.0}},
        "z_sweep": {"lo": 0.2, "hi": 0.8, "count": 4},
    },
    "fig6": {
        "description": "Gilmore-Perelomov squeezing parameters, kappa = 3",
        "command": PresetCommand.SQUEEZE,
        "system": {"id": CatalogId.GILMORE_PERELOMOV, "params": {"kappa": 3.0}},
        "z_sweep": {"lo": 0.05, "hi": 0.95, "count": 19},
    },
    "fig7": {
        "description": "Hydrogen-like phase distribution",
        "command": PresetCommand.DIST,
        "system": {"id": CatalogId.HYDROGEN_LIKE, "params": {}},
        "z_sweep": {"lo": 0.2, "hi": 0.8, "count": 4},
    },
    "fig8": {
        "description": "Hydrogen-like squeezing parameters",
        "command": PresetCommand.SQUEEZE,
        "system": {"id": CatalogId.HYDROGEN_LIKE, "params": {}},
        "z_sweep": {"lo": 0.05, "hi": 0.95, "count": 19},
    },
    "fig9": {
        "description": "Poschl-Teller phase distribution, nu = 5",
        "command": PresetCommand.DIST,
        "system": {"id": CatalogId.POSCHL_TELLER, "params": {"nu": 5.0}},
        "z_sweep": {"lo": 0.5, "hi": 2.0, "count": 4},
    },
    "fig10": {
        "description": "Poschl-Teller squeezing parameters, nu = 5",
        "command": PresetCommand.SQUEEZE,
        "system": {"id": CatalogId.POSCHL_TELLER, "params": {"nu": 5.0}},
        "z_sweep": {"lo": 0.1, "hi": 4.0, "count": 40},
    },
    "fig11": {
        "description": "Isotonic oscillator phase distribution, gamma = 5/2",
        "command": PresetCommand.DIST,
        "system": {"id": CatalogId.ISOTONIC, "params": {"gamma_p": 2.5}},
        "z_sweep": {"lo": 0.5, "hi": 2.0, "count": 4},
    },
    "fig12": {
        "description": "Isotonic oscillator squeezing parameters, gamma = 5/2",
        "command": PresetCommand.SQUEEZE,
        "system": {"id": CatalogId.ISOTONIC, "params": {"gamma_p": 2.5}},
        "z_sweep": {"lo": 0.1, "hi": 4.0, "count": 40},
    },
}
