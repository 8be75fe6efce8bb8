"""Path management for per-user files."""

import os


def resource_path(relative_path: str) -> str:
    """Get the absolute path to a per-user resource.

    The configuration file lives in APPDATA/IsoHorn (Windows) or
    ~/.config/IsoHorn; the directory is created on demand.

    Args:
        relative_path: File name relative to the IsoHorn directory

    Returns:
        Absolute path to the resource

    Examples:
        >>> resource_path("isohorn.ini")
        '/home/user/.config/IsoHorn/isohorn.ini'
    """
    appdata = os.getenv("APPDATA")
    if appdata is None:
        appdata = os.path.expanduser("~/.config")
    appdata_path = os.path.join(appdata, "IsoHorn")
    os.makedirs(appdata_path, exist_ok=True)
    return os.path.join(appdata_path, relative_path)
