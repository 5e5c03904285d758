"""Render overlays, circular configurations, and Ferrers boards to SVG.

Writes three files next to this script: the small overlay with its
bicoloured paths highlighted, its circular configuration, and the Ferrers
boards of the two shapes overlaid.
"""

import pathlib

from schurpaths import all_bicoloured, render_configuration, render_ferrers, render_overlay
from schurpaths.gallery import demo_overlay_small

here = pathlib.Path(__file__).resolve().parent
ov = demo_overlay_small()
paths, _ = all_bicoloured(ov)

overlay_svg = render_overlay(ov, highlight=paths)
(here / "overlay.svg").write_text(overlay_svg, encoding="utf-8")
print("wrote", here / "overlay.svg")

config_svg = render_configuration(ov.configuration)
(here / "configuration.svg").write_text(config_svg, encoding="utf-8")
print("wrote", here / "configuration.svg")

boards_svg = render_ferrers(
    [(ov.white.shape, "#888888"), (ov.black.shape, "#000000")]
)
(here / "boards.svg").write_text(boards_svg, encoding="utf-8")
print("wrote", here / "boards.svg")
