import json
import logging
import os
import sys

import clearskies
from clearskies.authentication import public
from clearskies.contexts.cli import CLI, build_context
from clearskies.input_outputs.exceptions import CLIInputError

from ..commands import ROUTES
from ..di import StandardDependencies
from ..handlers import SubcommandRouting
from ..input_outputs import EXIT_CODES, CommandLine


class CommandLineContext(CLI):
    def __init__(self, di):
        super().__init__(di)

    def finalize_handler_config(self, config):
        return {
            "authentication": public(),
            **config,
        }

    def __call__(self):
        if self.handler is None:
            raise ValueError("Cannot execute CommandLineContext context without first configuring it")

        try:
            input_output = self.di.build(CommandLine, cache=False)
        except CLIInputError as e:
            print(json.dumps({"status": "client_error", "error": str(e)}, indent=2))
            return EXIT_CODES[400]
        return self.handler(input_output)


def cli(
    application,
    di_class=StandardDependencies,
    bindings=None,
    binding_classes=None,
    binding_modules=None,
    additional_configs=None,
):
    return build_context(
        CommandLineContext,
        application,
        di_class=di_class,
        bindings=bindings,
        binding_classes=binding_classes,
        binding_modules=binding_modules,
        additional_configs=additional_configs,
    )


def application(routes=None):
    return clearskies.Application(SubcommandRouting, {"routes": ROUTES if routes is None else routes})


def main():
    logging.basicConfig(
        level=os.environ.get("QL_LOG_LEVEL", "INFO").upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    sys.exit(cli(application())())
