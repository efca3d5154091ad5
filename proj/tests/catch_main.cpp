// Catch2 amalgamated translation unit; test binaries link against this.
#include "catch_amalgamated.cpp"
