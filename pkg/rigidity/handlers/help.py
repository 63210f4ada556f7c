"""
help subcommand: examples per subcommand and background topics.
"""

import logging

from rigidity.help import get_all_examples, get_help_topic, get_operation_examples
from rigidity.help.examples import EXAMPLES, TOPICS
from rigidity.utils import EXIT_ERROR, EXIT_OK

logger = logging.getLogger(__name__)


def handle_help_operation(args, logger):
    """Handle help: all examples, one subcommand's examples, or a topic."""
    topic = getattr(args, 'topic', None)
    if not topic:
        print(get_all_examples())
        print(f"\nTopics: {', '.join(name.lower() for name in TOPICS)}")
        return EXIT_OK
    if topic.lower() in EXAMPLES:
        print(get_operation_examples(topic))
        return EXIT_OK
    if topic.upper() in TOPICS:
        print(get_help_topic(topic))
        return EXIT_OK
    logger.error(f"No help for {topic!r}; try a subcommand name or one of: "
                 f"{', '.join(name.lower() for name in TOPICS)}")
    return EXIT_ERROR
