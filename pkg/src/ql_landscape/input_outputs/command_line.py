import json

import clearskies

from ..exceptions import ConfigError

EXIT_CODES = {
    200: 0,
    400: 2,
    404: 2,
    409: 3,
}

FLAG_TYPES = {
    "config": str,
    "seed": int,
    "out": str,
    "fast": bool,
    "workers": int,
    "strict": bool,
    "s3_uri": str,
    "mnist_path": str,
}


def typed_flags(flags):
    """
    clearskies hands flags over as strings (`--seed=5`) or as True for bare switches (`--fast`).  Converts them to
    their declared types; dashes in flag names match underscores.
    """
    typed = {}
    for (name, value) in flags.items():
        key = name.replace("-", "_")
        if key not in FLAG_TYPES:
            raise ConfigError(f"Unrecognized flag '--{name}'.  Known flags: {', '.join(sorted(FLAG_TYPES.keys()))}")
        flag_type = FLAG_TYPES[key]
        if flag_type == bool:
            if value is True or str(value).lower() in ["1", "true", "yes"]:
                typed[key] = True
            elif str(value).lower() in ["0", "false", "no"]:
                typed[key] = False
            else:
                raise ConfigError(f"Flag '--{name}' is a switch, not '{value}'")
            continue
        if value is True:
            raise ConfigError(f"Flag '--{name}' needs a value, as in '--{name}=...'")
        try:
            typed[key] = flag_type(value)
        except ValueError:
            raise ConfigError(f"Flag '--{name}' must be an integer, not '{value}'")
    return typed


class CommandLine(clearskies.input_outputs.CLI):
    """
    The clearskies CLI input/output with the flags as a typed request body, a JSON response on stdout, and the status
    code mapped to a process exit code.  Nothing is read from stdin.
    """

    def respond(self, response, status_code=200):
        if type(response) == bytes:
            response = response.decode("utf-8")
        print(response if type(response) == str else json.dumps(response, indent=2, default=str))
        return EXIT_CODES.get(status_code, 1)

    def has_body(self):
        return bool(self._kwargs)

    def get_body(self):
        return json.dumps(self._kwargs)

    def json_body(self, required=True, allow_non_json_bodies=False):
        return typed_flags(self._kwargs)

    def context_specifics(self):
        return {}
