from scripts.data_loader import load_published_tables
from scripts.data_analysis import compare_with_published
from scripts.classify import classify_length, classify_type
