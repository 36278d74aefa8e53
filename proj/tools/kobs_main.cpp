#include <exception>
#include <iostream>

#include "commands.hpp"
#include "kobs/errors.hpp"

int main(int argc, char** argv) {
    using namespace kobs;
    try {
        return cli::run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
    } catch (const RangeError& e) {
        std::cerr << "range error: " << e.what() << '\n';
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return cli::kExitUsage;
}
