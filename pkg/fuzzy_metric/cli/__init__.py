"""The ``fuzzy-metric`` command and its gallery of worked examples."""

from fuzzy_metric.cli.app import app, main
from fuzzy_metric.cli.gallery import GALLERY, GalleryResult, GalleryRow, run_gallery

__all__ = ["GALLERY", "GalleryResult", "GalleryRow", "app", "main", "run_gallery"]
