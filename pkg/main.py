#!/usr/bin/env python3
"""
Pronoun Disambiguation - Main Entry Point

Resolves pronouns in English text against a commonsense Star ontology, builds
the instance model the text describes, and answers questions about it.

Exit codes: 0 ok, 1 input error, 2 ontology error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from src.api.service import NluService
from src.ontology.linker import link_ontology
from src.ontology.loader import DEFAULT_MANIFEST, load_documents
from src.utils.config import Config, get_config
from src.utils.errors import OntologyError, RossError
from src.utils.log import setup_logging

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_ONTOLOGY_ERROR = 2


def load_config(path: Optional[str]) -> Config:
    return Config(path) if path else get_config()


def build_service(args: argparse.Namespace, config: Config) -> NluService:
    """Service over --ontology, else the configured ontology directory"""
    return NluService.from_config(config, args.ontology)


def read_input(args: argparse.Namespace) -> str:
    if args.file:
        return Path(args.file).read_text(encoding="utf-8")
    if args.text is not None:
        return args.text
    return sys.stdin.read()


def cmd_disambiguate(args: argparse.Namespace, config: Config) -> int:
    service = build_service(args, config)
    text = read_input(args)
    output = service.disambiguate(
        text,
        text_source="DocumentFile" if args.file else "CommandLine",
        document_file=Path(args.file).name if args.file else None,
    )
    if args.trace:
        for line in output.trace:
            print(line, file=sys.stderr)
    for warning in output.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    print(output.annotated_text())
    if args.emit_model:
        Path(args.emit_model).write_text(output.export_xml(), encoding="ascii")
        logging.info("Instance model written to %s", args.emit_model)
    return EXIT_OK


def cmd_ask(args: argparse.Namespace, config: Config) -> int:
    service = build_service(args, config)
    session_id = service.sessions.new_id()
    if args.context:
        service.disambiguate(args.context, session_id, text_source="CommandLine")

    if args.text:
        print(service.answer(args.text, session_id))
        return EXIT_OK

    # Interactive loop: a line ending in "?" is a question, anything else is new context
    print("Enter text to disambiguate or a question ending in '?'; empty line quits.")
    for line in sys.stdin:
        line = line.strip()
        if not line:
            break
        try:
            if line.endswith("?"):
                print(service.answer(line, session_id))
            else:
                print(service.disambiguate(line, session_id, text_source="CommandLine").annotated_text())
        except RossError as e:
            print(f"error: {e}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace, config: Config) -> int:
    import uvicorn  # pylint: disable=import-outside-toplevel

    from src.api.app import app, set_service  # pylint: disable=import-outside-toplevel

    set_service(build_service(args, config))
    uvicorn.run(app, host=args.host or config.get("api.host", "0.0.0.0"), port=args.port or config.get("api.port", 5000))
    return EXIT_OK


def cmd_check_ontology(args: argparse.Namespace, config: Config) -> int:
    documents = load_documents(args.directory, args.manifest or config.get("ontology.manifest", DEFAULT_MANIFEST))
    for document in documents:
        for diagnostic in document.diagnostics:
            print(f"{document.source_name}:{diagnostic}")
    ontology = link_ontology(documents)
    print(f"{len(ontology.classes)} object frame classes, {len(ontology.behaviors)} behavior classes")
    for name in sorted(ontology.behaviors):
        behavior = ontology.behaviors[name]
        print(f"  {name}: {', '.join(behavior.verb_dictionary) or '-'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Pronoun Disambiguation - resolve pronouns with a commonsense ontology")
    parser.add_argument("--config", help="Configuration file (default: config.yaml, then config.example.yaml)")
    parser.add_argument("--log-level", help="Override the configured log level")
    commands = parser.add_subparsers(dest="command", required=True)

    disambiguate = commands.add_parser("disambiguate", help="Annotate pronouns with their antecedents")
    disambiguate.add_argument("--ontology", help="Ontology directory (default: from config)")
    source = disambiguate.add_mutually_exclusive_group()
    source.add_argument("--text", help="Text to disambiguate (default: stdin)")
    source.add_argument("--file", help="Read the text from a file")
    disambiguate.add_argument("--emit-model", metavar="XML", help="Write the instance model export here")
    disambiguate.add_argument("--trace", action="store_true", help="Print the engine trace to stderr")
    disambiguate.set_defaults(handler=cmd_disambiguate)

    ask = commands.add_parser("ask", help="Answer questions about a disambiguated text")
    ask.add_argument("--ontology", help="Ontology directory (default: from config)")
    ask.add_argument("--context", help="Text to disambiguate before answering")
    ask.add_argument("--text", help="Question; omit for an interactive session")
    ask.set_defaults(handler=cmd_ask)

    serve = commands.add_parser("serve", help="Run the HTTP service")
    serve.add_argument("--ontology", help="Ontology directory (default: from config)")
    serve.add_argument("--host", help="Bind address (default: api.host)")
    serve.add_argument("--port", type=int, help="Port (default: api.port)")
    serve.set_defaults(handler=cmd_serve)

    check = commands.add_parser("check-ontology", help="Parse and link an ontology directory")
    check.add_argument("directory", help="Directory holding the manifest and .star files")
    check.add_argument("--manifest", help=f"Manifest file name (default: {DEFAULT_MANIFEST})")
    check.set_defaults(handler=cmd_check_ontology)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main function"""
    args = build_parser().parse_args(argv)
    config = load_config(args.config)
    setup_logging(config, args.log_level)

    try:
        return args.handler(args, config)
    except KeyboardInterrupt:
        print("\n\nOperation cancelled by user.", file=sys.stderr)
        return EXIT_OK
    except OntologyError as e:
        print(f"ontology error: {e}", file=sys.stderr)
        return EXIT_ONTOLOGY_ERROR
    except (RossError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
