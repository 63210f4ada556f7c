"""
config subcommand: view, set and reset configuration values.
"""

import json
import logging

from rigidity.config import RigidityConfig

logger = logging.getLogger(__name__)


def parse_config_value(value: str):
    """Interpret true/false/null, integers and JSON literals; anything else stays a string."""
    lowered = value.lower()
    if lowered in ('true', 'false'):
        return lowered == 'true'
    if lowered in ('null', 'none'):
        return None
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        return value


def _print_section(name, values):
    print(f"\n[{name}]")
    for key, value in values.items():
        print(f"  {key}: {value}")


def handle_config_operation(args, logger):
    """Handle config view/set/reset"""
    cfg = RigidityConfig()

    if not args.config_operation:
        logger.error("No config operation specified")
        return 1

    if args.config_operation == 'view':
        config_dict = cfg.to_dict()
        if args.section:
            if args.section not in config_dict:
                logger.error(f"Configuration section '{args.section}' not found")
                return 1
            if args.json:
                print(json.dumps(config_dict[args.section], indent=2))
            else:
                print(f"Configuration section '{args.section}':")
                for key, value in config_dict[args.section].items():
                    print(f"  {key}: {value}")
        elif args.json:
            print(json.dumps(config_dict, indent=2))
        else:
            print("Current configuration:")
            for section, section_data in config_dict.items():
                _print_section(section, section_data)
        return 0

    if args.config_operation == 'set':
        key_parts = args.key.split('.')
        if len(key_parts) != 2:
            logger.error("Configuration key must be in the format 'section.option'")
            return 1
        section, option = key_parts
        if section not in RigidityConfig.DEFAULT_CONFIG or option not in RigidityConfig.DEFAULT_CONFIG[section]:
            logger.error(f"Unknown configuration key '{args.key}'")
            return 1
        value = parse_config_value(args.value)
        cfg.set(args.key, value)
        if cfg.save_global_config():
            print(f"Set {args.key} = {value} in global configuration")
            return 0
        logger.error("Failed to save configuration")
        return 1

    if args.config_operation == 'reset':
        if args.section:
            if not cfg.reset_section(args.section):
                logger.error(f"Configuration section '{args.section}' not found")
                return 1
            message = f"Reset configuration section '{args.section}' to defaults"
        else:
            cfg.reset_to_defaults()
            message = "Reset configuration to defaults"
        if cfg.save_global_config():
            print(message)
            return 0
        logger.error("Failed to save configuration")
        return 1

    logger.error(f"Unknown config operation: {args.config_operation}")
    return 1
