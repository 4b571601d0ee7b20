from .command_line import CommandLine, EXIT_CODES, FLAG_TYPES, typed_flags
