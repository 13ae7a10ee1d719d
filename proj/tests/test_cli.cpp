// Subprocess smoke test for the ekr binary; argv[1] is the binary path.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int failures = 0;
std::string binary;

int run(const std::string& args, std::string* out = nullptr) {
    const std::string out_file = "/tmp/ekr_cli_out.txt";
    const std::string cmd = binary + " " + args + " >" + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    if (out) {
        std::ifstream f(out_file);
        std::stringstream ss;
        ss << f.rdbuf();
        *out = ss.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void expect_exit(const std::string& args, int expected) {
    int got = run(args);
    if (got != expected) {
        std::printf("FAIL: '%s' exited %d, expected %d\n", args.c_str(), got, expected);
        ++failures;
    }
}

void expect_contains(const std::string& args, const std::string& needle) {
    std::string out;
    run(args, &out);
    if (out.find(needle) == std::string::npos) {
        std::printf("FAIL: '%s' output lacks '%s'\n", args.c_str(), needle.c_str());
        ++failures;
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::printf("usage: test_cli <ekr-binary>\n");
        return 2;
    }
    binary = argv[1];

    expect_exit("verify --n 5 --action setwise", 0);
    expect_exit("verify --n 5 --action pointwise", 0);
    expect_exit("verify --n 11 --action setwise", 0);
    expect_exit("verify --n 1 --action setwise", 2);    // below the domain
    expect_exit("verify --n 4 --action pointwise", 2);  // pointwise needs n >= 5
    expect_exit("verify --n 5 --action sideways", 2);   // bad enum
    expect_exit("verify --action setwise", 2);          // missing --n

    expect_exit("table3 --n 13", 1);  // printed table has known bad cells
    expect_exit("table3 --n 12", 2);

    expect_exit("spectrum --n 9 --action setwise", 0);
    expect_exit("spectrum --n 10 --action pointwise", 0);
    expect_exit("spectrum --n 9 --action setwise --point 1000/1,1000/1", 1);
    expect_exit("spectrum --n 9 --action setwise --point nonsense", 2);
    expect_exit("spectrum --n 7 --action setwise", 2);

    expect_exit("coclique --n 5 --action setwise", 0);
    expect_exit("coclique --n 4 --action pointwise", 1);  // not-applicable
    expect_exit("coclique --n 8 --action setwise", 2);

    expect_exit("nonsense --n 5", 2);
    expect_exit("", 2);

    expect_contains("verify --n 5 --action setwise", "\"verdict\": \"pass\"");
    expect_contains("verify --n 5 --action setwise --format csv", "verdict,\"pass\"");
    expect_contains("verify --n 5 --action setwise --format md", "| verdict | pass |");

    // --out writes the report to a file
    std::remove("/tmp/ekr_cli_report.json");
    expect_exit("verify --n 4 --action setwise --out /tmp/ekr_cli_report.json", 0);
    {
        std::ifstream f("/tmp/ekr_cli_report.json");
        std::stringstream ss;
        ss << f.rdbuf();
        if (ss.str().find("\"schema\": \"ekr2-report/1\"") == std::string::npos) {
            std::printf("FAIL: --out file missing schema line\n");
            ++failures;
        }
    }

    if (failures == 0) std::printf("cli smoke: all checks passed\n");
    return failures == 0 ? 0 : 1;
}
