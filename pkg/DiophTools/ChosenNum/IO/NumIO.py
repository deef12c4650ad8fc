import json
import os

import pandas as pd

from DiophTools.ChosenNum.log import get_logger

logger = get_logger(__name__)


class NumIO:
    """
    @class NumIO
    @brief JSON and CSV persistence for sequences and reports.

    Every writer is deterministic: JSON keys are sorted and CSV columns keep
    the order they are given in, so identical inputs give identical bytes.
    """

    def __init__(self):
        pass

    @staticmethod
    def check_and_create_folder(folder_path):
        """
        @brief Creates folder_path if it does not exist yet.

        @param folder_path (str): folder to check or create.
        @return str: folder_path.
        """
        if folder_path and not os.path.exists(folder_path):
            os.makedirs(folder_path)
            logger.info("created folder '%s'", folder_path)
        return folder_path

    @staticmethod
    def read_json(file_name):
        """
        @brief Reads a JSON file and returns its contents.

        @exception FileNotFoundError If the specified file does not exist.
        @exception json.JSONDecodeError If the file is not valid JSON.
        """
        with open(file_name, "r", encoding="utf-8") as file:
            return json.load(file)

    @staticmethod
    def json_text(data):
        """Canonical JSON rendering: sorted keys, 2-space indent, trailing newline."""
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def save_text(file_name, text):
        """
        @brief Writes an already rendered report to file_name, creating the folder if needed.
        """
        NumIO.check_and_create_folder(os.path.dirname(file_name))
        with open(file_name, "w", encoding="utf-8", newline="\n") as file:
            file.write(text)

    @staticmethod
    def save_json(file_name, data):
        """
        @brief Saves data to file_name as canonical JSON.
        """
        NumIO.save_text(file_name, NumIO.json_text(data))

    @staticmethod
    def csv_text(rows, columns):
        """
        @brief CSV rendering of rows with a header row.

        @param rows list of row lists (or dicts keyed by column).
        @param columns column order.
        """
        frame = pd.DataFrame(rows, columns=columns)
        return frame.to_csv(index=False, lineterminator="\n")

