"""
Pronoun disambiguation FastAPI application
"""

import logging
from typing import Optional

from fastapi import Depends, FastAPI, Form, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse

from src.api.service import NluService
from src.api.service import Task as NluTask
from src.utils.config import get_config
from src.utils.errors import RossError

logger = logging.getLogger(__name__)

TASK_PATHS = ("/ServerMethod.NLUTask", "/ServerSideTask.NLUTask")

# Initialize FastAPI app
app = FastAPI(
    title="Pronoun Disambiguation API",
    description="Resolve pronouns with a commonsense ontology and answer questions about the result",
    version="1.0.0",
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

_service: Optional[NluService] = None


def set_service(service: NluService) -> None:
    """Install a ready service (the CLI loads the ontology before serving)"""
    global _service  # pylint: disable=global-statement
    _service = service


def get_service() -> NluService:
    """Service singleton, loaded from the configuration on first use"""
    if _service is None:
        set_service(NluService.from_config(get_config()))
    return _service


@app.exception_handler(RossError)
async def ross_error_handler(_: Request, exc: RossError) -> PlainTextResponse:
    logger.info("Request failed: %s", exc)
    return PlainTextResponse(content=str(exc).splitlines()[0], status_code=400)


@app.exception_handler(RequestValidationError)
async def validation_error_handler(_: Request, exc: RequestValidationError) -> PlainTextResponse:
    missing = [str(error["loc"][-1]) for error in exc.errors() if error.get("type") == "missing"]
    message = f"missing form field {', '.join(missing)}" if missing else "invalid form fields"
    logger.info("Request rejected: %s", message)
    return PlainTextResponse(content=message, status_code=400)


@app.exception_handler(Exception)
async def unexpected_error_handler(_: Request, exc: Exception) -> PlainTextResponse:
    logger.error("Unexpected error", exc_info=exc)
    return PlainTextResponse(content="internal error", status_code=500)


@app.get("/")
async def root():
    """API info"""
    return {
        "message": "Pronoun Disambiguation API",
        "version": "1.0.0",
        "endpoints": {"health": "/health", "docs": "/docs", "tasks": list(TASK_PATHS)},
        "tasks": [task.value for task in NluTask],
    }


@app.get("/health")
async def health() -> PlainTextResponse:
    """Health check endpoint"""
    return PlainTextResponse(content="OK", status_code=200)


def nlu_task(
    Task: str = Form(...),  # pylint: disable=invalid-name
    InputText: str = Form(""),  # pylint: disable=invalid-name
    SessionId: Optional[str] = Form(None),  # pylint: disable=invalid-name
    service: NluService = Depends(get_service),
) -> PlainTextResponse:
    """
    Run one NLU task.

    Form fields:
    - Task: DisambiguateSentences, AnswerQuestion or GenerateInstanceModel
    - InputText: the text to disambiguate, or the question
    - SessionId: keeps a disambiguation for later AnswerQuestion calls
    """
    body = service.handle_task(Task, InputText, SessionId)
    media_type = "application/xml" if Task == NluTask.GENERATE_INSTANCE_MODEL.value else "text/plain"
    return PlainTextResponse(content=body, media_type=media_type)


for _path in TASK_PATHS:
    app.add_api_route(_path, nlu_task, methods=["POST"], response_class=PlainTextResponse)
