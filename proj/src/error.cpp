#include "tmoments/error.hpp"

#include <sstream>

namespace tmoments {

namespace {

std::string describe(int order, double nu)
{
    std::ostringstream out;
    out << "moment of order " << order << " requires nu > " << order << ", got nu = " << nu;
    return out.str();
}

}  // namespace

NonexistentMoment::NonexistentMoment(int order, double nu)
    : DomainError(describe(order, nu)), order_(order), nu_(nu)
{
}

void require_moment(int order, double nu)
{
    if (!(nu > order)) {
        throw NonexistentMoment(order, nu);
    }
}

}  // namespace tmoments
