#ifndef DGC_ERROR_HPP
#define DGC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace dgc {

// Error taxonomy shared by every module. The CLI maps kinds to exit codes:
// success 0, certificate 2, precondition 3, budget 4.
enum class ErrorKind {
    parse,
    precondition,
    budget_exceeded,
    slack_violation,
    round_limit,
    model_violation,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg))
        , kind_(kind)
    {
    }
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::string msg, int line)
        : Error(ErrorKind::parse, std::move(msg))
        , line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(std::string msg)
        : Error(ErrorKind::precondition, std::move(msg))
    {
    }
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string msg, int where = 0)
        : Error(ErrorKind::budget_exceeded, std::move(msg))
        , where_(where)
    {
    }
    // Vertex (or neighborhood anchor) where the budget ran out, 0 if n/a.
    int where() const { return where_; }

private:
    int where_;
};

// A vertex whose residual list is too small for the requested extension.
class SlackViolation : public Error {
public:
    SlackViolation(std::string stage, int vertex, int list_size, int residual_degree,
        int full_degree, bool paper_breach)
        : Error(ErrorKind::slack_violation,
              "slack violation at stage '" + stage + "': vertex " + std::to_string(vertex)
                  + " has |L|=" + std::to_string(list_size) + ", d_U="
                  + std::to_string(residual_degree) + ", d_G=" + std::to_string(full_degree))
        , stage_(std::move(stage))
        , vertex_(vertex)
        , list_size_(list_size)
        , residual_degree_(residual_degree)
        , full_degree_(full_degree)
        , paper_breach_(paper_breach)
    {
    }
    const std::string& stage() const { return stage_; }
    int vertex() const { return vertex_; }
    int list_size() const { return list_size_; }
    int residual_degree() const { return residual_degree_; }
    int full_degree() const { return full_degree_; }
    bool paper_breach() const { return paper_breach_; }

private:
    std::string stage_;
    int vertex_;
    int list_size_;
    int residual_degree_;
    int full_degree_;
    bool paper_breach_;
};

class RoundLimitExceeded : public Error {
public:
    RoundLimitExceeded(std::string msg, std::vector<int> unhalted)
        : Error(ErrorKind::round_limit, std::move(msg))
        , unhalted_(std::move(unhalted))
    {
    }
    const std::vector<int>& unhalted() const { return unhalted_; }

private:
    std::vector<int> unhalted_;
};

class ModelViolation : public Error {
public:
    explicit ModelViolation(std::string msg)
        : Error(ErrorKind::model_violation, std::move(msg))
    {
    }
};

} // namespace dgc

#endif
