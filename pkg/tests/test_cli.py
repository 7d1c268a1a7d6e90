"""
Command line tests.
"""

import io
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from main import EXIT_INPUT_ERROR, EXIT_OK, EXIT_ONTOLOGY_ERROR, main
from src.utils.config import PROJECT_ROOT
from tests.helpers import ONTOLOGY_DIR, TROPHY_BIG

CONFIG = str(PROJECT_ROOT / "config.example.yaml")

SHORT_VERB_SOURCE = """
ObjectFrameClass "TopObjectFrameClass"
(
  Dictionary ( English ( { "top", "tops" } ) );
);

BehaviorClass "SpinBehaviorClass"
(
  Dictionary ( English ( { "spin", "spun" } ) );
);
"""


def run_cli(*argv: str):
    """Exit code, stdout and stderr of one CLI invocation"""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(["--config", CONFIG, "--log-level", "WARNING", *argv])
    return code, out.getvalue(), err.getvalue()


class CliTester(unittest.TestCase):
    """Sub-commands and exit codes."""

    def test_disambiguate(self) -> None:
        """The annotated text goes to stdout."""
        code, out, _ = run_cli("disambiguate", "--text", TROPHY_BIG)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("it(trophy)", out)

    def test_emit_model(self) -> None:
        """--emit-model writes the XML export."""
        with tempfile.TemporaryDirectory() as tmp:
            target = os.path.join(tmp, "model.xml")
            code, _, _ = run_cli("disambiguate", "--text", TROPHY_BIG, "--emit-model", target)
            self.assertEqual(code, EXIT_OK)
            with open(target, encoding="ascii") as f:
                self.assertIn("TextSource value=\"CommandLine\"", f.read())

    def test_disambiguate_file(self) -> None:
        """Text read from a file is marked as a document."""
        with tempfile.TemporaryDirectory() as tmp:
            source = os.path.join(tmp, "schemas.txt")
            target = os.path.join(tmp, "model.xml")
            with open(source, "w", encoding="utf-8") as f:
                f.write(TROPHY_BIG + "\n")
            code, out, _ = run_cli("disambiguate", "--file", source, "--emit-model", target)
            self.assertEqual(code, EXIT_OK)
            self.assertIn("it(trophy)", out)
            with open(target, encoding="ascii") as f:
                self.assertIn('DocumentFile name="schemas.txt"', f.read())

    def test_trace(self) -> None:
        """--trace prints the engine trace to stderr."""
        _, _, err = run_cli("disambiguate", "--text", TROPHY_BIG, "--trace")
        self.assertIn("[trace] ProcessCommunicationUnit", err)

    def test_outside_grammar(self) -> None:
        """Unparseable text is an input error."""
        code, _, err = run_cli("disambiguate", "--text", "The trophy the suitcase.")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("error:", err)

    def test_ask(self) -> None:
        """ask answers a question about its context text."""
        code, out, _ = run_cli("ask", "--context", TROPHY_BIG, "--text", "What is too big?")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "The trophy is too big.")

    def test_check_ontology(self) -> None:
        """check-ontology lists behavior classes and their verbs."""
        code, out, _ = run_cli("check-ontology", str(ONTOLOGY_DIR))
        self.assertEqual(code, EXIT_OK)
        self.assertIn("NotFit_Big_BehaviorClass", out)

    def test_check_ontology_diagnostics(self) -> None:
        """check-ontology prints the repairs and remarks recorded while parsing."""
        with tempfile.TemporaryDirectory() as tmp:
            with open(os.path.join(tmp, "manifest.txt"), "w", encoding="utf-8") as f:
                f.write("spin.star\n")
            with open(os.path.join(tmp, "spin.star"), "w", encoding="utf-8") as f:
                f.write(SHORT_VERB_SOURCE)
            code, out, _ = run_cli("check-ontology", tmp)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("spin.star:", out)
        self.assertIn("SpinBehaviorClass: expected 5 verb forms, found 2", out)
        self.assertIn("1 object frame classes, 1 behavior classes", out)

    def test_missing_ontology(self) -> None:
        """A directory without a manifest is an ontology error."""
        with tempfile.TemporaryDirectory() as tmp:
            code, _, err = run_cli("check-ontology", tmp)
        self.assertEqual(code, EXIT_ONTOLOGY_ERROR)
        self.assertIn("ontology error:", err)


if __name__ == "__main__":
    unittest.main()
