from src.utils.instantiators import instantiate_method
from src.utils.pylogger import get_pylogger, setup_rich_logging
from src.utils.rich_utils import print_config_tree, render_check_table
from src.utils.utils import check_choice, extras, task_wrapper, write_output
