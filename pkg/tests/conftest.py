import pytest

from zcverify.groups import dixon_character_table
from zcverify.pipeline import Pipeline, PipelineConfig, ReportStore, golden_data, packaged_corpus


@pytest.fixture(scope="session")
def corpus():
    return packaged_corpus()


@pytest.fixture(scope="session")
def golden():
    return golden_data()["groups"]


@pytest.fixture(scope="session")
def store_dir(tmp_path_factory):
    return str(tmp_path_factory.mktemp("zcv_store"))


@pytest.fixture(scope="session")
def pipeline(corpus, store_dir):
    return Pipeline(PipelineConfig(store=ReportStore(store_dir), corpus=corpus))


@pytest.fixture(scope="session")
def tables(corpus, pipeline):
    cache = {}

    def get(name):
        if name not in cache:
            entry = corpus.get(name)
            cache[name] = pipeline.table_for(entry.group(), entry)
        return cache[name]

    return get
