// Command-line front end: table export, adapted-basis construction, and the
// self-check suites, in machine (json, csv) and human (text, latex) formats.
#pragma once

namespace icosa {

int run_cli(int argc, char** argv);

}  // namespace icosa
