# -*- coding: utf-8 -*-
# flake8: noqa

"""Command-line front end."""

from .tasks import (PASS, FAIL, ERROR, EXAMPLES, KIND_ALIASES, EXAMPLE_ALIASES, TASK_PARAMS,
                    parse_task, parse_tasks, task_from_flag, run_task, default_settings,
                    ideal_entry)
from .report import (main, make_parser, load_scenario, run_tasks, exit_code, render_text,
                     report_dict, EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_ERROR)
