#######################################################################
# Project: Damped Waves Module
# File: simulation_module.py
# Description: Abstract base class for all stateful simulation components
# Author: AbigailWilliams1692
# Created: 2026-09-02
# Updated: 2026-10-11
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import logging
from abc import ABC
from enum import Enum
from typing import Any, Optional


#######################################################################
# Enums
#######################################################################
class ModuleStatus(Enum):
    """
    Lifecycle states shared by engines, providers and runners.
    """
    IDLE = "idle"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


#################################################
# Class Definition
#################################################
class SimulationModule(ABC):
    """
    Simulation Module Abstract Base Class. Owns the identity, logger and status
    of every stateful component (engines, series providers, runners).
    """

    #################################################
    # Class Attributes
    #################################################
    _name: str = "SimulationModule"

    #################################################
    # Constructor
    #################################################
    def __init__(
        self,
        instance_id: Optional[int] = None,
        logger: Optional[logging.Logger] = None,
        log_level: int = logging.INFO,
    ) -> None:
        """
        Constructor method.

        :param instance_id: int: Unique identifier for the module instance.
        :param logger: logging.Logger: Logger instance for logging.
        :param log_level: int: Level applied to the module logger.
        """
        # Instance ID
        self._instance_id = instance_id or id(self)

        # Log Level
        self._log_level = log_level

        # Logger
        self._logger = logger or self.refresh_logger()

        # Status
        self._status: ModuleStatus = ModuleStatus.IDLE

    #################################################
    # Getter & Setter Methods
    #################################################
    def get_name(self) -> str:
        """
        Get the name of the module.

        :return: str: Name of the module.
        """
        return self._name

    def get_instance_id(self) -> int:
        """
        Get the unique identifier of the module instance.

        :return: int: Unique identifier of the module instance.
        """
        return self._instance_id

    def get_logger(self) -> logging.Logger:
        """
        Get the logger instance.

        :return: logging.Logger: Logger instance.
        """
        return self._logger

    def refresh_logger(self) -> logging.Logger:
        """
        Build a logger named after the concrete class.

        :return: logging.Logger: The levelled logger.
        """
        logger = logging.getLogger(name=self.__class__.__name__)
        logger.setLevel(self._log_level)
        return logger

    def get_log_level(self) -> int:
        """
        Get the log level of the logger instance.

        :return: int: Log level of the logger instance.
        """
        return self._log_level

    def get_status(self) -> ModuleStatus:
        """
        Get the lifecycle status of the module.

        :return: ModuleStatus: Current status.
        """
        return self._status

    def set_status(self, status: Any) -> None:
        """
        Set the lifecycle status of the module.

        :param status: ModuleStatus: New status.
        """
        self._status = ModuleStatus(status)
