"""
riccati-plane 测试包
"""
