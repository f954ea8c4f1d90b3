#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, capturing standard output; standard error passes through unless redirected.
inline CommandResult run_command(const std::string& command)
{
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("popen failed: " + command);
    CommandResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string kit(const std::string& args, const std::string& env = "")
{
    return env + (env.empty() ? "" : " ") + "'" SCHREIER_KIT_BIN "' " + args;
}
