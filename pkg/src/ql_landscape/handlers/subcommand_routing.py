import logging

import clearskies

from ..exceptions import ConfigError, DataFormatError, DivergedCellsError

logger = logging.getLogger(__name__)


class SubcommandRouting(clearskies.handlers.Routing):
    """
    Routes a command line invocation to the callable registered for its subcommand.

    The callable is executed through the dependency injection container with the parsed flags as `request_data`.
    Configuration problems come back as a 400 (exit code 2), unknown subcommands as a 404 (also exit code 2), and
    diverged cells in strict mode as a 409 (exit code 3).
    """

    def __init__(self, di):
        super().__init__(di)

    _configuration_defaults = {
        "routes": {},
    }

    def handler_classes(self, configuration):
        # not actually used but required by base
        return []

    def _check_configuration(self, configuration):
        if not configuration.get("routes"):
            raise KeyError("Missing required configuration for SubcommandRouting handler: 'routes'")
        if not isinstance(configuration["routes"], dict):
            raise ValueError(
                "Configuration 'routes' for handler SubcommandRouting must be a dictionary, but instead I got something else."
            )

    def handle(self, input_output):
        route = input_output.get_path_info().strip("/")
        routes = self.configuration("routes")
        if route not in routes:
            available = ", ".join(sorted(routes.keys()))
            return self.error(input_output, f"Unknown subcommand '{route}'.  Available subcommands: {available}", 404)

        try:
            result = self._di.call_function(
                routes[route],
                request_data=input_output.json_body(required=False),
                **input_output.context_specifics(),
            )
        except (ConfigError, DataFormatError, FileNotFoundError) as e:
            logger.error(f"'{route}' failed: {e}")
            return self.error(input_output, str(e), 400)
        except DivergedCellsError as e:
            logger.error(str(e))
            return input_output.respond({"status": "diverged", "error": str(e), "cells": e.cells}, 409)
        return input_output.respond(result, 200)

    def documentation(self):
        return []
