"""
Logging utilities for cojump.
"""

import json
import logging
import os
from datetime import datetime
from typing import Any, Dict, Optional

import numpy as np

# Configure logger
logger = logging.getLogger("cojump")


class LogConfig:
    """Global logging configuration."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(LogConfig, cls).__new__(cls)
            # Default configuration
            cls._instance._log_dir = os.getenv("COJUMP_LOG_DIR")
            cls._instance._log_level = logging.INFO
            cls._instance._simulation_level = None
            cls._instance._console_output = None
            cls._instance._initialized = False
        return cls._instance

    @property
    def log_dir(self) -> Optional[str]:
        """Get the current log directory."""
        return self._log_dir

    @log_dir.setter
    def log_dir(self, value: Optional[str]) -> None:
        """Set the log directory."""
        self._log_dir = value
        if value:
            os.makedirs(value, exist_ok=True)
            logger.info(f"Log directory set to: {value}")

    @property
    def log_level(self) -> int:
        """Get the current log level."""
        return self._log_level

    @log_level.setter
    def log_level(self, value: int) -> None:
        """Set the log level."""
        self._log_level = value
        if self._initialized:
            logger.setLevel(value)

    @property
    def simulation_level(self) -> Optional[int]:
        """Get the level of the simulation engine loggers."""
        return self._simulation_level

    @simulation_level.setter
    def simulation_level(self, value: Optional[int]) -> None:
        """Set the level of the simulation engine loggers."""
        self._simulation_level = value
        if self._initialized:
            logging.getLogger("cojump.simulate").setLevel(value or self._log_level)

    @property
    def console_output(self) -> Optional[bool]:
        """Get the console output setting."""
        return self._console_output

    @console_output.setter
    def console_output(self, value: Optional[bool]) -> None:
        """Set the console output setting."""
        self._console_output = value

    def initialize(self, force: bool = False) -> None:
        """Set up logging with the current configuration, once unless forced."""
        if force or not self._initialized:
            _install_handlers(
                level=self._log_level,
                simulation_level=self._simulation_level,
                log_dir=self._log_dir,
                console_output=self._console_output
            )
            self._initialized = True


# Global configuration instance
config = LogConfig()


def configure_logging(
    log_dir: Optional[str] = None,
    log_level: Optional[int] = None,
    simulation_level: Optional[int] = None,
    console_output: Optional[bool] = None
) -> None:
    """
    Configure global logging settings for cojump.

    This is the main function that external programs should use to configure logging.

    Args:
        log_dir: Directory to store log files (default: COJUMP_LOG_DIR env var)
                If not set, no file logging occurs
        log_level: Default logging level for all loggers (default: INFO)
        simulation_level: Specific level for the cojump.simulate loggers (default: same as log_level)
        console_output: Control console output:
            - None (default): automatic (console if no log_dir, no console if log_dir)
            - True: Force console output regardless of log_dir
            - False: Force no console output regardless of log_dir

    Example:
        >>> from cojump import configure_logging
        >>> import logging
        >>>
        >>> # Long Monte Carlo run: progress in a file, per-path debug silenced
        >>> configure_logging(
        ...     log_dir="/var/log/cojump",
        ...     log_level=logging.INFO,
        ...     simulation_level=logging.WARNING
        ... )
    """
    if log_dir is not None:
        config.log_dir = log_dir
    if log_level is not None:
        config.log_level = log_level
    if simulation_level is not None:
        config.simulation_level = simulation_level
    if console_output is not None:
        config.console_output = console_output

    config.initialize(force=True)


def truncate_series(data: Any, max_length: int = 20) -> Any:
    """
    Replace long numeric sequences by a placeholder before logging.

    Args:
        data: Data to shorten (array, list, dict or scalar)
        max_length: Longest sequence kept as is

    Returns:
        The data in the same structure, with long sequences summarized
    """
    if isinstance(data, np.ndarray):
        if data.size > max_length:
            return f"[array shape={data.shape}, dtype={data.dtype}]"
        return data.tolist()

    if isinstance(data, dict):
        return {k: truncate_series(v, max_length) for k, v in data.items()}

    if isinstance(data, (list, tuple)):
        if len(data) > max_length:
            return f"[{type(data).__name__} of {len(data)} items]"
        return [truncate_series(item, max_length) for item in data]

    return data


def ensure_log_directory(log_dir: Optional[str] = None) -> Optional[str]:
    """
    Ensure log directory exists and return the path.

    Args:
        log_dir: Directory to store log files (default: use global config)

    Returns:
        Path to the log directory or None if no directory is configured
    """
    directory = log_dir or config.log_dir
    if directory:
        os.makedirs(directory, exist_ok=True)
        return directory
    return None


def get_log_filename(command: str, log_type: str, log_dir: Optional[str] = None) -> Optional[str]:
    """
    Generate a filename for a log file.

    Args:
        command: Command name (estimate, simulate, mc, sweep)
        log_type: Type of log (e.g., 'run')
        log_dir: Directory to store log files (default: use global config)

    Returns:
        Full path to the log file or None if no directory is configured
    """
    directory = ensure_log_directory(log_dir)
    if not directory:
        return None

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
    return os.path.join(directory, f"{command}_{log_type}_{timestamp}.json")


def write_to_log_file(data: Dict[str, Any], filename: Optional[str]) -> None:
    """
    Write data to a log file in JSON format.

    Args:
        data: Data to write
        filename: Path to log file (if None, no file is written)
    """
    if not filename:
        return

    try:
        with open(filename, 'w') as f:
            json.dump(data, f, indent=2, default=str)
        logger.debug(f"Log written to: {filename}")
    except Exception as e:
        logger.warning(f"Failed to write log file: {e}")


def log_run(command: str, parameters: Dict[str, Any], outputs: Optional[Dict[str, Any]] = None,
            log_dir: Optional[str] = None) -> None:
    """
    Log the parameters and outputs of a command.

    Args:
        command: Command name
        parameters: Parameters of the run
        outputs: Produced artifacts or statistics
        log_dir: Optional override for log directory
    """
    timestamp = datetime.now().isoformat()
    logger.debug(f"RUN [{command}]: {timestamp}")
    logger.debug(f"Parameters: {truncate_series(parameters)}")

    log_filename = get_log_filename(command, "run", log_dir)
    if log_filename:
        write_to_log_file({
            "timestamp": timestamp,
            "command": command,
            "parameters": parameters,
            "outputs": outputs or {},
        }, log_filename)


def _install_handlers(level: int, simulation_level: Optional[int], log_dir: Optional[str],
                      console_output: Optional[bool]) -> None:
    """Replace the handlers of the package logger: console unless a log directory is set, plus a file in log_dir."""
    if simulation_level is None:
        simulation_level = level

    logger.setLevel(level)
    logging.getLogger("cojump.simulate").setLevel(simulation_level)
    logger.handlers.clear()

    should_console = True if console_output is True else (
        False if console_output is False else (log_dir is None)
    )

    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    if should_console:
        console_handler = logging.StreamHandler()
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    if log_dir:
        try:
            directory = ensure_log_directory(log_dir)
            log_file = os.path.join(directory, f"cojump_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log")
            file_handler = logging.FileHandler(log_file)
            # Files always capture at least DEBUG
            file_handler.setLevel(min(level, logging.DEBUG))
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
            logger.info(f"Detailed logs will be written to: {log_file}")
        except Exception as e:
            logger.warning(f"Could not set up file logging: {e}")
