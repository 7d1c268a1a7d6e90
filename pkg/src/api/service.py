"""
NLU task service shared by the HTTP app and the command line
"""

import logging
from enum import Enum
from typing import Optional

from src.api.qa import answer_question
from src.api.sessions import DEFAULT_TTL, SessionStore
from src.engine.driver import EngineOutput, SemanticEngine
from src.frontend.lexicon import Lexicon, load_lexicon
from src.ontology.linker import Ontology
from src.ontology.loader import DEFAULT_MANIFEST, load_ontology
from src.utils.config import Config, EngineSettings
from src.utils.errors import NoModel, UnknownTask

logger = logging.getLogger(__name__)


class Task(str, Enum):
    DISAMBIGUATE_SENTENCES = "DisambiguateSentences"
    ANSWER_QUESTION = "AnswerQuestion"
    GENERATE_INSTANCE_MODEL = "GenerateInstanceModel"


class NluService:
    """
    One shared ontology, one engine run per request.

    The ontology and lexicon are read-only after construction; sessions are
    the only shared mutable state and the store serializes access to them.
    """

    def __init__(
        self,
        ontology: Ontology,
        settings: Optional[EngineSettings] = None,
        lexicon: Optional[Lexicon] = None,
        sessions: Optional[SessionStore] = None,
    ):
        self.ontology = ontology
        self.engine = SemanticEngine(ontology, settings, lexicon)
        self.sessions = sessions or SessionStore()

    @classmethod
    def from_config(cls, config: Config, ontology_directory: Optional[str] = None) -> "NluService":
        """
        Args:
            ontology_directory: Overrides ontology.directory

        Raises:
            OntologyLoadError: the ontology directory or its manifest is missing
        """
        directory = ontology_directory or config.resolve_path("ontology.directory", "data/ontology")
        ontology = load_ontology(directory, config.get("ontology.manifest", DEFAULT_MANIFEST))
        lexicon_file = config.resolve_path("lexicon.file")
        lexicon = load_lexicon(lexicon_file) if lexicon_file is not None and lexicon_file.exists() else None
        sessions = SessionStore(ttl=config.get("api.session_ttl", DEFAULT_TTL))
        return cls(ontology, config.engine_settings(), lexicon, sessions)

    def disambiguate(
        self,
        text: str,
        session_id: Optional[str] = None,
        text_source: Optional[str] = None,
        document_file: Optional[str] = None,
    ) -> EngineOutput:
        output = self.engine.run(text, text_source=text_source, document_file=document_file)
        for warning in output.warnings:
            logger.info("Disambiguation warning: %s", warning)
        if session_id:
            self.sessions.set(session_id, output)
        return output

    def answer(self, question: str, session_id: Optional[str] = None, context_text: Optional[str] = None) -> str:
        """
        Raises:
            NoModel: the session holds no disambiguation and no context text was given
            NoAnswer: nothing in the model answers the question
        """
        output = self.disambiguate(context_text, session_id) if context_text else None
        if output is None and session_id:
            output = self.sessions.get(session_id)
        if output is None:
            raise NoModel("no disambiguation in this session")
        return answer_question(question, output, self.ontology, self.engine.lexicon)

    def instance_model_xml(self, text: str, text_source: Optional[str] = None) -> str:
        return self.disambiguate(text, text_source=text_source).export_xml()

    def handle_task(self, task: str, input_text: str, session_id: Optional[str] = None) -> str:
        """
        Dispatch one NLU task and return its plain-text result.

        Raises:
            UnknownTask: the task name is not one of Task
            RossError: whatever the task itself raises
        """
        try:
            kind = Task(task)
        except ValueError as e:
            raise UnknownTask(f"unknown task '{task}'") from e
        logger.debug("Task %s (session %s)", kind.value, session_id or "-")
        if kind == Task.DISAMBIGUATE_SENTENCES:
            return self.disambiguate(input_text, session_id).annotated_text()
        if kind == Task.ANSWER_QUESTION:
            return self.answer(input_text, session_id)
        return self.instance_model_xml(input_text)
