"""
Tabular input and output of sampled paths.

A path file is a UTF-8 CSV with a header row and two columns, ``time`` and
``value``, using ``.`` as decimal separator. Times are fractions of a day.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np
import pandas as pd

from cojump.core.grid import AsyncPanel, SampledPath, TimeGrid
from cojump.exceptions import CojumpError, DataParseError

# Configure logger
logger = logging.getLogger("cojump.core.tabular")

PATH_COLUMNS = ("time", "value")


class TabularPath:
    """
    A sampled path stored in a CSV file.

    The file is read lazily and cached, the same way for every caller.
    """

    def __init__(self,
                 source: Union[str, Path],
                 delimiter: str = ',',
                 encoding: str = 'utf-8'):
        """
        Initialize a tabular path input.

        Args:
            source: Path of the CSV file
            delimiter: Field delimiter (default: ',')
            encoding: Text encoding (default: utf-8)
        """
        if not isinstance(source, (str, Path)):
            raise DataParseError(f"Path source must be a string or Path, got {type(source).__name__}",
                                 component="core")
        self.source = Path(source)
        self.delimiter = delimiter
        self.encoding = encoding
        self._cached_frame: Optional[pd.DataFrame] = None
        self._cached_path: Optional[SampledPath] = None

    def get_frame(self) -> pd.DataFrame:
        """
        Read the file into a two-column frame.

        Raises:
            DataParseError: If the file is missing, has the wrong header, or
                holds non numeric entries
        """
        if self._cached_frame is not None:
            return self._cached_frame

        if not self.source.exists():
            raise DataParseError(f"Path file not found: {self.source}", file_path=str(self.source),
                                 component="core")
        try:
            frame = pd.read_csv(self.source, sep=self.delimiter, encoding=self.encoding, decimal=".")
        except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
            raise DataParseError(f"Failed to parse path file: {e}", file_path=str(self.source),
                                 component="core", original_exception=e)

        columns = [str(column).strip().lower() for column in frame.columns]
        if tuple(columns) != PATH_COLUMNS:
            raise DataParseError(
                f"Path file must have the header 'time,value', got {','.join(map(str, frame.columns))}",
                file_path=str(self.source), component="core",
            )
        frame.columns = list(PATH_COLUMNS)
        try:
            frame = frame.astype(np.float64)
        except (TypeError, ValueError) as e:
            raise DataParseError(f"Path file holds non numeric entries: {e}", file_path=str(self.source),
                                 component="core", original_exception=e)

        self._cached_frame = frame
        return frame

    def get_path(self) -> SampledPath:
        """
        Build the SampledPath held in the file.

        Raises:
            DataParseError: If the file cannot be parsed or does not describe a valid path
        """
        if self._cached_path is not None:
            return self._cached_path

        frame = self.get_frame()
        try:
            grid = TimeGrid(frame["time"].to_numpy())
            path = SampledPath(grid, frame["value"].to_numpy())
        except CojumpError as e:
            raise DataParseError(f"Invalid path in file: {e}", file_path=str(self.source),
                                 component="core", original_exception=e)

        logger.info(f"Loaded {len(grid)} observations over [0, {grid.horizon}] from {self.source}")
        self._cached_path = path
        return path

    @property
    def metadata(self) -> Dict[str, Any]:
        """
        Return metadata about the file and, once parsed, the path.
        """
        metadata: Dict[str, Any] = {
            "source": str(self.source),
            "encoding": self.encoding,
            "delimiter": self.delimiter,
        }
        if self.source.exists():
            metadata["file_size"] = os.path.getsize(self.source)
        if self._cached_path is not None:
            metadata.update({
                "observations": len(self._cached_path.grid),
                "horizon": self._cached_path.grid.horizon,
                "mesh": self._cached_path.grid.mesh,
            })
        return metadata


def read_path(source: Union[str, Path]) -> SampledPath:
    """Read a SampledPath from a ``time,value`` CSV file."""
    return TabularPath(source).get_path()


def read_async_panel(source1: Union[str, Path], source2: Union[str, Path]) -> AsyncPanel:
    """Read two path files into an AsyncPanel."""
    return AsyncPanel(read_path(source1), read_path(source2))


def write_path(path: SampledPath, destination: Union[str, Path]) -> Path:
    """
    Write a SampledPath as a ``time,value`` CSV file.

    Returns:
        The path of the written file
    """
    destination = Path(destination)
    destination.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame({"time": path.grid.times, "value": path.values})
    frame.to_csv(destination, index=False, float_format="%.17g")
    logger.debug(f"Wrote {len(frame)} observations to {destination}")
    return destination
