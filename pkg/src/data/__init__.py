"""
.. automodule:: src.data.import_data
    :members:
.. automodule:: src.data.export_data
    :members:
"""
from .import_data import read_matrix_csv, read_vector_csv, load_csv_problem, read_problem
from .export_data import write_json, write_problem, write_trace, suffixed_path, meta_path
