"""Input file formats and loaders."""
