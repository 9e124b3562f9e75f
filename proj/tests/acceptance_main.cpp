#include "rootleib/cli.hpp"

int main() { return rootleib::run_acceptance(); }
