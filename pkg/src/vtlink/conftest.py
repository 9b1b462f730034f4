def pytest_ignore_collect(collection_path, config):
    # Importing __main__ would run the command line interface
    if collection_path.name == "__main__.py":
        return True
    return None
