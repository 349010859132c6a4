#include <string>
#include <vector>

#include <cyclo/cli.hpp>

int main(int argc, char** argv)
{
    return cyclo::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
