"""Run flags set from the command line"""

RUN_FLAGS = {
    'quiet': False
}
