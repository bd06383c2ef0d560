"""Command router: dispatches subcommands and maps failures to exit codes"""
from ..constants import EXIT_INPUT_ERROR, EXIT_INVARIANT_FAILURE, EXIT_NUMERIC_ERROR
from ..errors import ArgumentError, ChainViolationError, NumericDomainError, StateInputError
from ..utils.logging import log_error, log_exception, log_info


class CommandRouter:
    """Routes subcommands to the action service"""
    
    def __init__(self, action_service):
        self.action_service = action_service
        self.handlers = {
            'analyze': action_service.handle_analyze,
            'sweep': action_service.handle_sweep,
            'verify': action_service.handle_verify,
        }
    
    def route_command(self, command: str, args) -> int:
        """Run a subcommand and return its exit code"""
        handler = self.handlers.get(command)
        if handler is None:
            log_error(f"Unknown command '{command}'")
            return EXIT_INPUT_ERROR
        
        log_info(f"Command {command} started")
        try:
            code = handler(args)
        except (ArgumentError, StateInputError, OSError) as e:
            log_error(f"{command}: {e}")
            code = EXIT_INPUT_ERROR
        except NumericDomainError as e:
            log_error(f"{command}: {type(e).__name__}: {e}")
            code = EXIT_NUMERIC_ERROR
        except ChainViolationError as e:
            log_error(f"{command}: {e}")
            code = EXIT_INVARIANT_FAILURE
        except Exception:
            log_exception(f"{command}: unexpected failure")
            raise
        log_info(f"Command {command} finished with exit code {code}")
        return code
