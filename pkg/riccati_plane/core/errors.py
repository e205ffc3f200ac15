"""
riccati-plane 异常层次

库中抛出的所有错误都继承自 ``RiccatiPlaneError``，
api 门面与 CLI 据此把失败映射为结果字典和退出码，不会误捕无关异常。
"""


class RiccatiPlaneError(Exception):
    """库错误基类"""
    exit_code = 1


class ValidationError(RiccatiPlaneError, ValueError):
    """输入在计算前被拒绝（CLI 退出码 2）"""
    exit_code = 2


class UnknownCase(ValidationError):
    """特例编号不在 17 个 Riccati 可约特例之中"""

    def __init__(self, index):
        self.index = index
        super().__init__(f"Unknown case (11,{index})")


class ArityMismatch(ValidationError):
    """参数个数与特例签名不符"""

    def __init__(self, case_id: int, expected: int, got: int):
        self.case_id = case_id
        self.expected = expected
        self.got = got
        super().__init__(
            f"Case (11,{case_id}) expects {expected} parameters, got {got}"
        )


class NonPositiveParameter(ValidationError):
    """要求为正的参数不为正"""

    def __init__(self, symbol: str, value: float):
        self.symbol = symbol
        self.value = value
        super().__init__(f"Parameter {symbol} must be > 0, got {value!r}")


class InvalidState(ValidationError):
    """状态坐标为负、NaN 或无穷"""
    pass


class ConfigError(ValidationError):
    """配置文件无法解析或取值非法"""
    pass


class ZeroDenominator(RiccatiPlaneError, ZeroDivisionError):
    """映射的分母在该状态处为零"""
    exit_code = 3


class ForbiddenInitial(RiccatiPlaneError):
    """初始条件落在该特例的禁止集内"""
    exit_code = 3


class DomainViolation(RiccatiPlaneError):
    """参数超出共轭映射的定义域"""
    exit_code = 3


class NotConjugateCase(RiccatiPlaneError):
    """该特例的 y 方程为自治或常数，没有共轭"""

    def __init__(self, case_id: int):
        self.case_id = case_id
        super().__init__(
            f"Case (11,{case_id}) has no conjugacy to a second order equation"
        )


class NotAFixedPoint(RiccatiPlaneError):
    """作为平衡点传入的状态不满足 f(s) = s"""
    pass


class NoConvergence(RiccatiPlaneError):
    """暴力迭代在迭代上限内未收敛"""
    pass
