from prefdist.logs.logger import LOGGER_NAME, LogWriter, Stopwatch, create_logger
