"""
Load an ontology directory through its manifest
"""

import logging
from pathlib import Path
from typing import List, Union

from src.ontology.linker import Ontology, link_ontology
from src.ontology.model import StarDocument
from src.ontology.parser import parse_star
from src.utils.errors import OntologyLoadError

logger = logging.getLogger(__name__)

DEFAULT_MANIFEST = "manifest.txt"


def read_manifest(directory: Path, manifest: str = DEFAULT_MANIFEST) -> List[Path]:
    """File paths listed in the manifest, in load order. Blank lines and # comments are skipped."""
    manifest_path = directory / manifest
    if not manifest_path.is_file():
        raise OntologyLoadError(f"ontology manifest not found: {manifest_path}")
    files = []
    for raw in manifest_path.read_text(encoding="utf-8").splitlines():
        entry = raw.split("#", 1)[0].strip()
        if entry:
            files.append(directory / entry)
    return files


def load_documents(directory: Union[str, Path], manifest: str = DEFAULT_MANIFEST) -> List[StarDocument]:
    directory = Path(directory)
    documents = []
    for path in read_manifest(directory, manifest):
        if not path.is_file():
            raise OntologyLoadError(f"ontology file listed in {manifest} is missing: {path}")
        document = parse_star(path.read_text(encoding="utf-8"), source_name=path.name)
        if document.diagnostics:
            logger.info("%s: %d diagnostic(s) while parsing", path.name, len(document.diagnostics))
        documents.append(document)
    return documents


def load_ontology(directory: Union[str, Path], manifest: str = DEFAULT_MANIFEST) -> Ontology:
    """
    Parse every file named by the manifest and link them into one ontology.

    Raises:
        OntologyLoadError: manifest or a listed file is missing
        OntologyError: any parse or link failure
    """
    documents = load_documents(directory, manifest)
    ontology = link_ontology(documents)
    logger.info("Loaded ontology from %s (%d files)", directory, len(documents))
    return ontology
