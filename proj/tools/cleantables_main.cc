#include "cleantables/cli.h"

int main(int argc, char **argv) { return cleantables::CliDispatch(argc, argv); }
